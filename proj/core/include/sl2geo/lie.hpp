#pragma once

#include <array>
#include <cstddef>

namespace sl2geo {

// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 zero() { return {}; }

    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

constexpr Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
constexpr Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
constexpr Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
constexpr Mat2 operator*(double s, const Mat2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
constexpr Mat2 operator*(const Mat2& x, double s) { return s * x; }
constexpr Mat2 operator*(const Mat2& x, const Mat2& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

constexpr double det(const Mat2& x) { return x.a * x.d - x.b * x.c; }
constexpr double trace(const Mat2& x) { return x.a + x.d; }
constexpr Mat2 transpose(const Mat2& x) { return {x.a, x.c, x.b, x.d}; }

// Inverse via the adjugate; throws Singular for a zero determinant.
Mat2 inverse(const Mat2& x);

double frobenius(const Mat2& x);
double max_abs(const Mat2& x);

// |det X - 1| within tol::det, scaled by the size of the products ad and bc.
bool is_unimodular(const Mat2& x, double eps);
bool is_unimodular(const Mat2& x);

// Rotation by angle theta, [[cos, -sin], [sin, cos]].
Mat2 rotation(double theta);

// 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> m{};

    static Mat3 identity();
    static Mat3 diag(double a, double b, double c);

    double& operator()(std::size_t i, std::size_t j) { return m[3 * i + j]; }
    double operator()(std::size_t i, std::size_t j) const { return m[3 * i + j]; }
};

Mat3 operator*(const Mat3& x, const Mat3& y);
Mat3 operator+(const Mat3& x, const Mat3& y);
Mat3 operator-(const Mat3& x, const Mat3& y);
Mat3 operator*(double s, const Mat3& x);
Mat3 transpose(const Mat3& x);
double det(const Mat3& x);
double max_abs(const Mat3& x);

// Coordinates in the basis {A0, A1, A2}.
struct Sl2Coord {
    double v0 = 0.0, v1 = 0.0, v2 = 0.0;

    friend constexpr bool operator==(const Sl2Coord&, const Sl2Coord&) = default;
};

Mat2 to_matrix(const Sl2Coord& v);
Sl2Coord to_coord(const Mat2& m);
std::array<double, 3> as_array(const Sl2Coord& v);
Sl2Coord from_array(const std::array<double, 3>& v);
Sl2Coord operator*(const Mat3& m, const Sl2Coord& v);

struct Basis {
    Mat2 a0, a1, a2;
};

// A0 = 1/2 [[0,-1],[1,0]], A1 = 1/2 [[0,1],[1,0]], A2 = 1/2 [[1,0],[0,-1]]
Basis basis();

Mat2 bracket(const Mat2& x, const Mat2& y);

// 2 tr(B C^T)
double metric_g(const Mat2& b, const Mat2& c);

// Exponential of a traceless matrix, using M^2 = -det(M) I.
Mat2 exp2(const Mat2& m);

// Matrix of X -> [A, X] in the {A0, A1, A2} basis; column j holds the coordinates of [A, Aj].
Mat3 adjoint_matrix(const Sl2Coord& a);
Mat3 adjoint_matrix(const Mat2& a);

} // namespace sl2geo
