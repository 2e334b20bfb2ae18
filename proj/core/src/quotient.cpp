#include "sl2geo/quotient.hpp"

#include "sl2geo/error.hpp"
#include "sl2geo/geodesic.hpp"
#include "sl2geo/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sl2geo {

namespace {

double regular_denominator(const QuotientPoint& p)
{
    const double d = radius_sq(p) - 1.0;
    if (d <= tol::quotient) {
        throw Error(Errc::SingularPoint, "point is on or inside the unit circle");
    }
    return d;
}

} // namespace

double radius_sq(const QuotientPoint& p) { return p.x * p.x + p.y * p.y; }

Stratum stratum(const QuotientPoint& p)
{
    return std::abs(radius_sq(p) - 1.0) <= tol::quotient ? Stratum::Singular : Stratum::Regular;
}

const char* to_string(Stratum s) noexcept
{
    return s == Stratum::Singular ? "singular" : "regular";
}

QuotientPoint project(const Mat2& x)
{
    if (!is_unimodular(x)) {
        throw Error(Errc::NotUnimodular, "determinant is not 1");
    }
    return {0.5 * (x.a + x.d), 0.5 * (x.b - x.c)};
}

RotationMatch recover_rotation(const Mat2& x1, const Mat2& x2)
{
    const QuotientPoint p1 = project(x1), p2 = project(x2);
    const double scale = std::max({1.0, std::abs(p1.x), std::abs(p1.y)});
    if (std::abs(p1.x - p2.x) > tol::match * scale || std::abs(p1.y - p2.y) > tol::match * scale) {
        throw Error(Errc::ClassMismatch, "matrices are not conjugate by a rotation");
    }
    // symmetric traceless parts, [[m, k], [k, -m]]
    const double m1 = 0.5 * (x1.a - x1.d), k1 = 0.5 * (x1.b + x1.c);
    const double m2 = 0.5 * (x2.a - x2.d), k2 = 0.5 * (x2.b + x2.c);
    RotationMatch out;
    const double n1 = m1 * m1 + k1 * k1, n2 = m2 * m2 + k2 * k2;
    out.unique = n1 > tol::quotient && n2 > tol::quotient;
    if (n1 == 0.0 || n2 == 0.0) {
        return out;
    }
    // conjugation turns m + ik by exp(-2i theta)
    double twice = std::remainder(std::atan2(k1, m1) - std::atan2(k2, m2), 2.0 * std::numbers::pi);
    if (twice <= -std::numbers::pi) {
        twice += 2.0 * std::numbers::pi;
    }
    out.theta = 0.5 * twice;
    const double c = std::cos(out.theta), s = std::sin(out.theta);
    out.k = {c, s, -s, c};
    return out;
}

std::pair<TangentVec2, TangentVec2> pushforward_frame(const Mat2& x)
{
    return {{0.25 * (x.b + x.c), 0.25 * (x.d - x.a)}, {0.25 * (x.a - x.d), 0.25 * (x.b + x.c)}};
}

Mat2 quotient_metric(const QuotientPoint& p)
{
    const double g = 4.0 / regular_denominator(p);
    return {g, 0.0, 0.0, g};
}

Christoffel christoffel(const QuotientPoint& p)
{
    const double d = regular_denominator(p);
    const double u = p.x / d, v = p.y / d;
    Christoffel g;
    g.gamma[0][0][0] = -u;
    g.gamma[0][1][1] = u;
    g.gamma[1][0][1] = g.gamma[1][1][0] = -u;
    g.gamma[0][0][1] = g.gamma[0][1][0] = -v;
    g.gamma[1][0][0] = v;
    g.gamma[1][1][1] = -v;
    return g;
}

OdeState geodesic_ode_rhs(const QuotientPoint& p, const TangentVec2& v)
{
    const double d = regular_denominator(p);
    const double sq = v.dx * v.dx - v.dy * v.dy;
    const double cross = 2.0 * v.dx * v.dy;
    return {v, {(p.x * sq + p.y * cross) / d, (-p.y * sq + p.x * cross) / d}};
}

double ode_residual(double c, std::span<const double> s_grid)
{
    double worst = 0.0;
    for (double s : s_grid) {
        const CurveJet j = planar_jet(c, s);
        // t = 2s
        const double vx = 0.5 * j.dx, vy = 0.5 * j.dy;
        const double ax = 0.25 * j.ddx, ay = 0.25 * j.ddy;
        const double d = j.x * j.x + j.y * j.y - 1.0;
        const double sq = vx * vx - vy * vy;
        const double cross = 2.0 * vx * vy;
        const double rx = d * ax - (j.x * sq + j.y * cross);
        const double ry = d * ay - (-j.y * sq + j.x * cross);
        worst = std::max(worst, std::hypot(rx, ry) / std::max(1.0, d));
    }
    return worst;
}

} // namespace sl2geo
