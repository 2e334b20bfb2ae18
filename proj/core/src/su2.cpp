#include "sl2geo/su2.hpp"

#include "sl2geo/error.hpp"
#include "sl2geo/geodesic.hpp"

#include <cmath>
#include <numbers>

namespace sl2geo {

QuotientPoint su2_planar_geodesic(double omega, double s)
{
    const double big = std::sqrt(1.0 + omega * omega);
    const double cb = std::cos(big * s), sb = std::sin(big * s);
    const double cw = std::cos(omega * s), sw = std::sin(omega * s);
    const double r = omega / big;
    return {cb * cw + r * sb * sw, cb * sw - r * sb * cw};
}

double su2_landing_time(double omega) { return std::numbers::pi / std::sqrt(1.0 + omega * omega); }

QuotientPoint su2_landing_point(double omega)
{
    const double a = omega * std::numbers::pi / std::sqrt(1.0 + omega * omega);
    return {-std::cos(a), -std::sin(a)};
}

double c_of_omega(double omega)
{
    const double big = std::sqrt(1.0 + omega * omega);
    if (omega >= 0.0) {
        // 5w^2 + 4 - 4wW and 4w^2 + 3 - 4wW, rewritten with wW - w^2 = w / (w + W)
        const double num = omega * omega + 4.0 - 4.0 * omega / (omega + big);
        const double den = 3.0 - 4.0 * omega / (omega + big);
        return -std::sqrt(num / den);
    }
    const double lead = omega + 2.0 * big;
    // 4w^2 + 3 + 4wW
    const double den = 3.0 + 4.0 * omega / (big - omega);
    return std::sqrt(lead * lead / den);
}

double landing_match_error(double omega)
{
    const QuotientPoint a = su2_landing_point(omega);
    const QuotientPoint b = landing_point(c_of_omega(omega));
    return std::hypot(a.x - b.x, a.y - b.y);
}

std::vector<QuotientPoint> reachable_boundary(double s, int n)
{
    if (n < 2) {
        throw Error(Errc::BadGrid, "need at least two omega samples");
    }
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw Error(Errc::BadGrid, "time must be positive and finite");
    }
    std::vector<QuotientPoint> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double psi = -0.5 * std::numbers::pi + std::numbers::pi * (i + 0.5) / n;
        const double omega = std::tan(psi);
        if (s >= su2_landing_time(omega)) {
            out.push_back(su2_landing_point(omega));
        } else {
            out.push_back(su2_planar_geodesic(omega, s));
        }
    }
    return out;
}

} // namespace sl2geo
