#pragma once

#include "sl2geo/lie.hpp"
#include "sl2geo/quotient.hpp"
#include "sl2geo/tolerance.hpp"

#include <cmath>
#include <complex>
#include <type_traits>
#include <utility>
#include <vector>

namespace sl2geo {

// 2/sqrt(3): above it geodesics land on the unit circle before crossing the x-axis.
inline const double kLandingThreshold = 2.0 / std::sqrt(3.0);
// 3/(2 sqrt 2): crosses the x-axis orthogonally, minimum of the crossing time.
inline const double kOrthogonalCrossing = 3.0 / (2.0 * std::sqrt(2.0));

namespace detail {

template <class T>
struct KernelPair {
    T cosh_part; // cosh(sqrt(q) s)
    T sinh_part; // sinh(sqrt(q) s) / sqrt(q)
};

// Shared kernel of the whole family with q = 1 - c^2. Near q = 0 both quotients are
// 0/0 in floating point, so a short series in z = q s^2 takes over.
template <class T>
KernelPair<T> kernel(T c, T s)
{
    using std::abs;
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    using std::sqrt;
    const T q = (T(1) - c) * (T(1) + c);
    const T z = q * s * s;
    if (abs(q) < tol::c_band && abs(z) <= 1e-2) {
        const T ch = T(1) + z * (T(1.0 / 2) + z * (T(1.0 / 24) + z * (T(1.0 / 720) + z * T(1.0 / 40320))));
        const T sh = s * (T(1) + z * (T(1.0 / 6) + z * (T(1.0 / 120) + z * (T(1.0 / 5040) + z * T(1.0 / 362880)))));
        return {ch, sh};
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (q > 0) {
            const T w = sqrt(q);
            return {cosh(w * s), sinh(w * s) / w};
        }
        const T w = sqrt(-q);
        return {cos(w * s), sin(w * s) / w};
    } else {
        const T w = sqrt(q);
        return {cosh(w * s), sinh(w * s) / w};
    }
}

template <class T>
std::pair<T, T> planar_point(T c, T s)
{
    using std::cos;
    using std::sin;
    const auto kp = kernel(c, s);
    const T k1 = kp.cosh_part;
    const T k2 = c * kp.sinh_part;
    return {k1 * cos(c * s) + k2 * sin(c * s), k1 * sin(c * s) - k2 * cos(c * s)};
}

} // namespace detail

struct GeodesicParam {
    double c = 0.0;
    // P = cos(phi) A1 + sin(phi) A2
    double phi = 0.0;
};

struct PathSample {
    double s = 0.0, x = 0.0, y = 0.0;
};

// Point and s-derivatives of the planar curve.
struct CurveJet {
    double x, y, dx, dy, ddx, ddy;
};

std::pair<double, double> k1k2(double c, double s);
QuotientPoint planar_geodesic(double c, double s);
CurveJet planar_jet(double c, double s);
double radius_sq(double c, double s);

// pi / sqrt(c^2 - 1); OutOfRegime for |c| < 2/sqrt3.
double landing_time(double c);
QuotientPoint landing_point(double c);

// Half-time of the first x-axis crossing, or of the landing for |c| > 2/sqrt3.
// Unbounded for c = 0. The crossing root is bracketed to root_tol.
double s_int(double c, double root_tol = tol::root);
// Abscissa of the first x-axis crossing, negative; 0 < |c| <= 2/sqrt3.
double x_int(double c);

Mat2 direction(double phi);
Mat2 lift(double c, const Mat2& p, double t);
Mat2 lift(const GeodesicParam& g, double t);

// n uniform samples on [0, s_max]; BadGrid for n < 2.
std::vector<PathSample> sample_path(double c, double s_max, int n);

} // namespace sl2geo
