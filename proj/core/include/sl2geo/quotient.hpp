#pragma once

#include "sl2geo/lie.hpp"

#include <array>
#include <span>
#include <utility>

namespace sl2geo {

// Conjugacy class of an SL(2) element under rotations: x = tr/2, y = (b - c)/2.
struct QuotientPoint {
    double x = 0.0, y = 0.0;
};

struct TangentVec2 {
    double dx = 0.0, dy = 0.0;
};

enum class Stratum { Regular, Singular };

double radius_sq(const QuotientPoint& p);
Stratum stratum(const QuotientPoint& p);
const char* to_string(Stratum s) noexcept;

// Throws NotUnimodular when det X is not 1.
QuotientPoint project(const Mat2& x);

struct RotationMatch {
    Mat2 k = Mat2::identity();
    // false within the singular band; k is then only the best alignment of the
    // (tiny) symmetric parts, and the identity when one of them vanishes
    bool unique = true;
    double theta = 0.0;
};

// K in SO(2) with K X1 K^T = X2, K = [[cos t, sin t], [-sin t, cos t]], t in (-pi/2, pi/2].
RotationMatch recover_rotation(const Mat2& x1, const Mat2& x2);

// Images of the right-invariant fields through A1 and A2 under the projection.
std::pair<TangentVec2, TangentVec2> pushforward_frame(const Mat2& x);

// Conformal factor 4 / (x^2 + y^2 - 1) as a diagonal 2x2 matrix.
Mat2 quotient_metric(const QuotientPoint& p);

// gamma[i][j][k], index 0 is x and 1 is y.
struct Christoffel {
    std::array<std::array<std::array<double, 2>, 2>, 2> gamma{};

    double operator()(int i, int j, int k) const { return gamma[i][j][k]; }
};

Christoffel christoffel(const QuotientPoint& p);

struct OdeState {
    TangentVec2 velocity;
    TangentVec2 acceleration;
};

OdeState geodesic_ode_rhs(const QuotientPoint& p, const TangentVec2& v);

// Largest residual of the geodesic equations along the closed-form curve with parameter c,
// evaluated at the given half-times. Each residual is |D a - N| / max(1, D), with
// D = x^2 + y^2 - 1, so grid points on the circle stay well defined.
double ode_residual(double c, std::span<const double> s_grid);

} // namespace sl2geo
