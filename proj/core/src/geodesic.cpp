#include "sl2geo/geodesic.hpp"

#include "sl2geo/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

namespace sl2geo {

namespace {

constexpr double pi = std::numbers::pi;
// c exactly at 2/sqrt3 may round either way
constexpr double kThresholdSlack = 1e-14;

bool at_or_above_threshold(double abs_c)
{
    return abs_c >= kLandingThreshold * (1.0 - kThresholdSlack);
}

// Bisection on a sign change f(lo) > 0 > f(hi), then two Newton steps kept inside [lo0, hi0].
double bracketed_root(const std::function<double(double)>& f,
                      const std::function<double(double)>& df, double lo, double hi, double root_tol)
{
    const double lo0 = lo, hi0 = hi;
    double flo = f(lo), fhi = f(hi);
    if (fhi >= 0.0 && std::abs(fhi) <= std::abs(flo) * 1e-15) {
        return hi;
    }
    if (!(flo > 0.0 && fhi < 0.0)) {
        throw Error(Errc::NoRoot, "no sign change on the crossing bracket");
    }
    for (int it = 0; it < 200 && hi - lo > root_tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if (fm > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double s = 0.5 * (lo + hi);
    for (int it = 0; it < 2; ++it) {
        const double d = df(s);
        if (d == 0.0) break;
        const double next = s - f(s) / d;
        if (next < lo0 || next > hi0) break;
        s = next;
    }
    return s;
}

// First positive root of tan(cs) = c tanh(sqrt(q) s)/sqrt(q), any q >= -c_band.
double crossing_near_hyperbolic(double c, double root_tol)
{
    const double q = (1.0 - c) * (1.0 + c);
    auto ratio = [c](double s) {
        const auto kp = detail::kernel(c, s);
        return kp.sinh_part / kp.cosh_part;
    };
    auto f = [c, ratio](double s) { return std::sin(c * s) - c * ratio(s) * std::cos(c * s); };
    auto df = [c, q, ratio](double s) {
        const double r = ratio(s);
        return c * q * r * r * std::cos(c * s) + c * c * r * std::sin(c * s);
    };
    return bracketed_root(f, df, pi / c, 1.5 * pi / c, root_tol);
}

// Root of k cos(kx) sin x - sin(kx) cos x in x = cs, k = sqrt(c^2 - 1)/c.
double crossing_trigonometric(double c, double root_tol)
{
    const double k = std::sqrt(c * c - 1.0) / c;
    auto f = [k](double x) { return k * std::cos(k * x) * std::sin(x) - std::sin(k * x) * std::cos(x); };
    auto df = [k](double x) { return (1.0 - k * k) * std::sin(k * x) * std::sin(x); };
    const double hi = std::min(2.0 * pi, pi / k);
    return bracketed_root(f, df, pi, hi, root_tol / c) / c;
}

} // namespace

std::pair<double, double> k1k2(double c, double s)
{
    const auto kp = detail::kernel(c, s);
    return {kp.cosh_part, c * kp.sinh_part};
}

QuotientPoint planar_geodesic(double c, double s)
{
    const auto [x, y] = detail::planar_point(c, s);
    return {x, y};
}

CurveJet planar_jet(double c, double s)
{
    const double q = (1.0 - c) * (1.0 + c);
    const auto kp = detail::kernel(c, s);
    const double k1 = kp.cosh_part, k2 = c * kp.sinh_part;
    const double dk1 = q * kp.sinh_part, dk2 = c * kp.cosh_part;
    const double ddk1 = q * kp.cosh_part, ddk2 = c * q * kp.sinh_part;
    const double co = std::cos(c * s), si = std::sin(c * s);

    const double u = dk1 + c * k2, w = dk2 - c * k1;
    const double uu = ddk1 + 2.0 * c * dk2 - c * c * k1;
    const double ww = ddk2 - 2.0 * c * dk1 - c * c * k2;
    return {k1 * co + k2 * si, k1 * si - k2 * co, u * co + w * si, u * si - w * co,
            uu * co + ww * si, uu * si - ww * co};
}

double radius_sq(double c, double s)
{
    const auto [k1, k2] = k1k2(c, s);
    return k1 * k1 + k2 * k2;
}

double landing_time(double c)
{
    const double ac = std::abs(c);
    if (!at_or_above_threshold(ac)) {
        throw Error(Errc::OutOfRegime, "landing needs |c| >= 2/sqrt(3)");
    }
    if (ac <= kLandingThreshold) {
        return std::sqrt(3.0) * pi;
    }
    return pi / std::sqrt(c * c - 1.0);
}

QuotientPoint landing_point(double c)
{
    const double ac = std::abs(c);
    if (!at_or_above_threshold(ac)) {
        throw Error(Errc::OutOfRegime, "landing needs |c| >= 2/sqrt(3)");
    }
    if (ac <= kLandingThreshold) {
        return {-1.0, 0.0};
    }
    const double angle = c * pi / std::sqrt(c * c - 1.0);
    return {-std::cos(angle), -std::sin(angle)};
}

double s_int(double c, double root_tol)
{
    const double ac = std::abs(c);
    if (ac == 0.0) {
        throw Error(Errc::Unbounded, "c = 0 never leaves the positive x-axis");
    }
    if (!std::isfinite(ac)) {
        throw Error(Errc::OutOfRegime, "c must be finite");
    }
    if (ac >= kLandingThreshold) {
        return landing_time(ac);
    }
    if (1.0 - ac * ac >= -tol::c_band) {
        return crossing_near_hyperbolic(ac, root_tol);
    }
    return crossing_trigonometric(ac, root_tol);
}

double x_int(double c)
{
    const double ac = std::abs(c);
    if (ac > kLandingThreshold * (1.0 + kThresholdSlack)) {
        throw Error(Errc::OutOfRegime, "x_int needs |c| <= 2/sqrt(3)");
    }
    if (ac >= kLandingThreshold) {
        return -1.0;
    }
    return -std::sqrt(radius_sq(ac, s_int(ac)));
}

Mat2 direction(double phi)
{
    const Basis e = basis();
    return std::cos(phi) * e.a1 + std::sin(phi) * e.a2;
}

Mat2 lift(double c, const Mat2& p, double t)
{
    const Mat2 a0 = basis().a0;
    return exp2((c * a0 + p) * t) * exp2((-c * t) * a0);
}

Mat2 lift(const GeodesicParam& g, double t) { return lift(g.c, direction(g.phi), t); }

std::vector<PathSample> sample_path(double c, double s_max, int n)
{
    if (n < 2) {
        throw Error(Errc::BadGrid, "need at least two samples");
    }
    if (!(s_max > 0.0) || !std::isfinite(s_max)) {
        throw Error(Errc::BadGrid, "s_max must be positive and finite");
    }
    std::vector<PathSample> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double s = (i == n - 1) ? s_max : s_max * static_cast<double>(i) / (n - 1);
        const auto p = planar_geodesic(c, s);
        out.push_back({s, p.x, p.y});
    }
    return out;
}

} // namespace sl2geo
