#include "sl2geo/synthesis.hpp"

#include "sl2geo/error.hpp"
#include "sl2geo/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace sl2geo {

namespace {

constexpr double pi = std::numbers::pi;

// Crossing of the radius sqrt(1 + target^2) along the geodesic c >= 0.
// Ascending: sinh-type or the first arc of the sine; descending: the second arc (c > 1).
std::optional<double> crossing(double c, double target, bool descending)
{
    const double q = (1.0 - c) * (1.0 + c);
    if (descending) {
        if (q >= 0.0) return std::nullopt;
        const double w = std::sqrt(-q);
        return (pi - std::asin(std::min(1.0, w * target))) / w;
    }
    if (q > 0.0) {
        const double w = std::sqrt(q);
        return std::asinh(w * target) / w;
    }
    if (q == 0.0) return target;
    const double w = std::sqrt(-q);
    if (w * target > 1.0) return std::nullopt;
    return std::asin(w * target) / w;
}

bool before_cut(double c, double s, double root_tol)
{
    if (c == 0.0) return true;
    return s <= s_int(c, root_tol) * (1.0 + 1e-14);
}

// Polar angle of the curve point, taken in (0, pi]; the closing crossing of the axis counts as pi.
double angle_at(double c, double s)
{
    const QuotientPoint p = planar_geodesic(c, s);
    if (p.y <= 0.0) return p.x < 0.0 ? pi : 0.0;
    return std::atan2(p.y, p.x);
}

template <class Pred>
double bisect_boundary(double lo, double hi, double root_tol, Pred good_at_hi)
{
    for (int it = 0; it < 300 && hi - lo > root_tol * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (good_at_hi(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

const char* to_string(CutLocusClass c) noexcept
{
    switch (c) {
    case CutLocusClass::Regular: return "regular";
    case CutLocusClass::SingularCircle: return "singular_circle";
    case CutLocusClass::NegativeAxisSegment: return "negative_axis";
    case CutLocusClass::StartPoint: return "start_point";
    }
    return "unknown";
}

CutLocusClass classify_point(const QuotientPoint& p)
{
    if (std::abs(p.x - 1.0) <= tol::quotient && std::abs(p.y) <= tol::quotient) {
        return CutLocusClass::StartPoint;
    }
    if (std::abs(radius_sq(p) - 1.0) <= tol::quotient) {
        return CutLocusClass::SingularCircle;
    }
    if (std::abs(p.y) <= tol::quotient && p.x <= -1.0 + tol::quotient) {
        return CutLocusClass::NegativeAxisSegment;
    }
    return CutLocusClass::Regular;
}

CutLocusClass classify_cut_locus(const Mat2& x) { return classify_point(project(x)); }

ClassDistance distance_to_class(const QuotientPoint& p, double root_tol)
{
    const CutLocusClass cls = classify_point(p);
    if (cls == CutLocusClass::StartPoint) {
        throw Error(Errc::StartPoint, "target is the start class");
    }
    const double r2 = radius_sq(p);
    if (r2 < 1.0 - tol::quotient) {
        throw Error(Errc::Unreachable, "target lies inside the unit disc");
    }
    ClassDistance out;
    out.on_cut_locus = cls != CutLocusClass::Regular;
    const double sign = p.y < 0.0 ? -1.0 : 1.0;
    const double ay = std::abs(p.y);
    const double target_angle = std::atan2(ay, p.x);

    // cos^2 + sin^2 may round above 1; those points are still on the circle
    if (r2 <= 1.0 + 4.0 * std::numeric_limits<double>::epsilon()) {
        // landing on the circle: c / sqrt(c^2 - 1) = 1 + angle / pi
        const double m = 1.0 + target_angle / pi;
        out.c = m / std::sqrt(m * m - 1.0);
        out.s = pi * std::sqrt(m * m - 1.0);
        out.c *= sign;
        out.t_f = 2.0 * out.s;
        return out;
    }
    if (p.y == 0.0 && p.x > 1.0) {
        out.s = std::acosh(p.x);
        out.t_f = 2.0 * out.s;
        return out;
    }

    const double target = std::sqrt(r2 - 1.0);
    const double c_tan = std::sqrt(r2) / target;
    const double s_tan = 0.5 * pi * target;
    const bool tangent_ok = before_cut(c_tan, s_tan, root_tol);

    double c;
    bool descending = false;
    if (tangent_ok && target_angle > angle_at(c_tan, s_tan)) {
        descending = true;
        c = bisect_boundary(1.0, c_tan, root_tol, [&](double cc) {
            const auto s = crossing(cc, target, true);
            return s && before_cut(cc, *s, root_tol) && angle_at(cc, *s) <= target_angle;
        });
    } else {
        // predicate holds near c = 0 and fails at the tangent geodesic
        c = bisect_boundary(0.0, c_tan, root_tol, [&](double cc) {
            const auto s = crossing(cc, target, false);
            return !(s && before_cut(cc, *s, root_tol) && angle_at(cc, *s) < target_angle);
        });
    }
    const auto s = crossing(c, target, descending);
    if (!s) {
        throw Error(Errc::NoRoot, "lost the radius crossing after bisection");
    }
    out.c = sign * c;
    out.s = *s;
    out.t_f = 2.0 * out.s;
    return out;
}

SynthesisSolution solve(const Mat2& xi, const Mat2& xf, double root_tol)
{
    if (!is_unimodular(xi) || !is_unimodular(xf)) {
        throw Error(Errc::NotUnimodular, "endpoints must have determinant 1");
    }
    const Mat2 target = xf * inverse(xi);
    const QuotientPoint p = project(target);
    const ClassDistance d = distance_to_class(p, root_tol);

    const Mat2 a2 = basis().a2;
    const Mat2 reached = lift(d.c, a2, d.t_f);
    const RotationMatch rot = recover_rotation(reached, target);

    SynthesisSolution sol;
    sol.c = d.c;
    sol.t_f = d.t_f;
    sol.k = rot.k;
    sol.p = rot.k * a2 * transpose(rot.k);
    sol.on_cut_locus = d.on_cut_locus;
    sol.residual = verify_solution(sol, xi, xf);
    return sol;
}

double verify_solution(const SynthesisSolution& sol, const Mat2& xi, const Mat2& xf)
{
    return frobenius(lift(sol.c, sol.p, sol.t_f) * xi - xf);
}

} // namespace sl2geo
