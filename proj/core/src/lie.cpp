#include "sl2geo/lie.hpp"

#include "sl2geo/error.hpp"
#include "sl2geo/tolerance.hpp"

#include <algorithm>
#include <cmath>

namespace sl2geo {

Mat2 inverse(const Mat2& x)
{
    const double dt = det(x);
    if (dt == 0.0) {
        throw Error(Errc::Singular, "2x2 matrix has zero determinant");
    }
    return {x.d / dt, -x.b / dt, -x.c / dt, x.a / dt};
}

double frobenius(const Mat2& x)
{
    return std::sqrt(x.a * x.a + x.b * x.b + x.c * x.c + x.d * x.d);
}

double max_abs(const Mat2& x)
{
    return std::max({std::abs(x.a), std::abs(x.b), std::abs(x.c), std::abs(x.d)});
}

bool is_unimodular(const Mat2& x, double eps)
{
    const double scale = std::max(1.0, std::abs(x.a * x.d) + std::abs(x.b * x.c));
    return std::abs(det(x) - 1.0) <= eps * scale;
}

bool is_unimodular(const Mat2& x) { return is_unimodular(x, tol::det); }

Mat2 rotation(double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    return {c, -s, s, c};
}

Mat3 Mat3::identity() { return diag(1.0, 1.0, 1.0); }

Mat3 Mat3::diag(double a, double b, double c)
{
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
}

Mat3 operator*(const Mat3& x, const Mat3& y)
{
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; ++k) {
                s += x(i, k) * y(k, j);
            }
            r(i, j) = s;
        }
    }
    return r;
}

Mat3 operator+(const Mat3& x, const Mat3& y)
{
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.m[i] = x.m[i] + y.m[i];
    return r;
}

Mat3 operator-(const Mat3& x, const Mat3& y)
{
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.m[i] = x.m[i] - y.m[i];
    return r;
}

Mat3 operator*(double s, const Mat3& x)
{
    Mat3 r;
    for (std::size_t i = 0; i < 9; ++i) r.m[i] = s * x.m[i];
    return r;
}

Mat3 transpose(const Mat3& x)
{
    Mat3 r;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) r(i, j) = x(j, i);
    }
    return r;
}

double det(const Mat3& x)
{
    return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1))
         - x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0))
         + x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
}

double max_abs(const Mat3& x)
{
    double r = 0.0;
    for (double v : x.m) r = std::max(r, std::abs(v));
    return r;
}

Mat2 to_matrix(const Sl2Coord& v)
{
    return {0.5 * v.v2, 0.5 * (v.v1 - v.v0), 0.5 * (v.v1 + v.v0), -0.5 * v.v2};
}

Sl2Coord to_coord(const Mat2& m) { return {m.c - m.b, m.b + m.c, m.a - m.d}; }

std::array<double, 3> as_array(const Sl2Coord& v) { return {v.v0, v.v1, v.v2}; }

Sl2Coord from_array(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }

Sl2Coord operator*(const Mat3& m, const Sl2Coord& v)
{
    return {m(0, 0) * v.v0 + m(0, 1) * v.v1 + m(0, 2) * v.v2,
            m(1, 0) * v.v0 + m(1, 1) * v.v1 + m(1, 2) * v.v2,
            m(2, 0) * v.v0 + m(2, 1) * v.v1 + m(2, 2) * v.v2};
}

Basis basis()
{
    return {{0.0, -0.5, 0.5, 0.0}, {0.0, 0.5, 0.5, 0.0}, {0.5, 0.0, 0.0, -0.5}};
}

Mat2 bracket(const Mat2& x, const Mat2& y) { return x * y - y * x; }

double metric_g(const Mat2& b, const Mat2& c) { return 2.0 * trace(b * transpose(c)); }

Mat2 exp2(const Mat2& m)
{
    const double q = det(m);
    double cpart, spart;
    if (std::abs(q) < tol::exp_series) {
        cpart = 1.0 - q / 2.0 + q * q / 24.0 - q * q * q / 720.0;
        spart = 1.0 - q / 6.0 + q * q / 120.0 - q * q * q / 5040.0;
    } else if (q > 0.0) {
        const double th = std::sqrt(q);
        cpart = std::cos(th);
        spart = std::sin(th) / th;
    } else {
        const double ze = std::sqrt(-q);
        cpart = std::cosh(ze);
        spart = std::sinh(ze) / ze;
    }
    return cpart * Mat2::identity() + spart * m;
}

Mat3 adjoint_matrix(const Sl2Coord& a)
{
    // a0 ad(A0) + a1 ad(A1) + a2 ad(A2)
    Mat3 r;
    r(0, 1) = -a.v2;
    r(0, 2) = a.v1;
    r(1, 0) = -a.v2;
    r(1, 2) = a.v0;
    r(2, 0) = a.v1;
    r(2, 1) = -a.v0;
    return r;
}

Mat3 adjoint_matrix(const Mat2& a) { return adjoint_matrix(to_coord(a)); }

} // namespace sl2geo
