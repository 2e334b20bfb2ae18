#include "sl2geo/automorphism.hpp"

#include "sl2geo/error.hpp"
#include "sl2geo/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sl2geo {

namespace {

double wrap_angle(double a)
{
    double r = std::remainder(a, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    return r;
}

double lorentz(const Sl2Coord& v, const Sl2Coord& w)
{
    return -v.v0 * w.v0 + v.v1 * w.v1 + v.v2 * w.v2;
}

Sl2Coord column(const Mat3& m, std::size_t j) { return {m(0, j), m(1, j), m(2, j)}; }

} // namespace

Mat3 lorentz_form() { return Mat3::diag(-1.0, 1.0, 1.0); }

Mat3 rotation_o(double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    Mat3 r = Mat3::identity();
    r(1, 1) = c;
    r(1, 2) = s;
    r(2, 1) = -s;
    r(2, 2) = c;
    return r;
}

Mat3 boost_h(double z)
{
    const double ch = std::cosh(z), sh = std::sinh(z);
    Mat3 r = Mat3::identity();
    r(0, 0) = ch;
    r(0, 2) = sh;
    r(2, 0) = sh;
    r(2, 2) = ch;
    return r;
}

Mat3 reflection_i(int branch)
{
    switch (branch) {
    case 0: return Mat3::identity();
    case 1: return Mat3::diag(-1.0, -1.0, 1.0);
    case 2: return Mat3::diag(-1.0, 1.0, -1.0);
    default: throw Error(Errc::NotInGroup, "branch must be 0, 1 or 2");
    }
}

bool is_so12(const Mat3& m)
{
    const double scale = std::max(1.0, max_abs(m) * max_abs(m));
    const Mat3 j = lorentz_form();
    const Mat3 gap = transpose(m) * j * m - j;
    if (max_abs(gap) > tol::alg * scale) return false;
    return std::abs(det(m) - 1.0) <= tol::alg * scale * std::max(1.0, max_abs(m));
}

Mat3 aut_matrix_from_group(const Mat2& k)
{
    const double dk = det(k);
    const double scale = std::max(1.0, std::abs(k.a * k.d) + std::abs(k.b * k.c));
    if (std::abs(std::abs(dk) - 1.0) > tol::det * scale) {
        throw Error(Errc::NotUnitDeterminant, "conjugating matrix must have det +-1");
    }
    const Mat2 kinv = inverse(k);
    const Basis e = basis();
    const Mat2 gens[3] = {e.a0, e.a1, e.a2};
    Mat3 r;
    for (std::size_t j = 0; j < 3; ++j) {
        const Sl2Coord v = to_coord(k * gens[j] * kinv);
        r(0, j) = v.v0;
        r(1, j) = v.v1;
        r(2, j) = v.v2;
    }
    return r;
}

Mat3 assemble(const Factorization& f)
{
    return rotation_o(f.theta1) * reflection_i(f.branch) * boost_h(f.z) * rotation_o(f.theta2);
}

Factorization factorize(const Mat3& m)
{
    if (!is_so12(m)) {
        throw Error(Errc::NotInGroup, "matrix does not preserve the Lorentz form with det 1");
    }
    // left rotation clears entry (1,0) and leaves (2,0) >= 0
    const double t1 = std::atan2(-m(1, 0), m(2, 0));
    const Mat3 left = rotation_o(t1) * m;
    // right rotation clears entry (0,1) and leaves (0,2) >= 0
    const double n = std::hypot(left(0, 1), left(0, 2));
    const double t2 = n == 0.0 ? 0.0 : std::atan2(left(0, 1) / n, left(0, 2) / n);
    const Mat3 h = left * rotation_o(t2);

    Factorization f;
    if (std::abs(h(2, 0)) <= std::abs(h(2, 1))) {
        // no boost left: h(0,0) = +-1 and a rotation in the lower block
        if (h(0, 0) > 0.0) {
            f.theta1 = std::atan2(h(1, 2), h(1, 1)) - t1 - t2;
            f.theta2 = 0.0;
        } else {
            f.theta1 = -t1;
            f.branch = 1;
            f.theta2 = std::atan2(-h(1, 2), -h(1, 1)) - t2;
        }
    } else {
        f.theta1 = -t1;
        f.theta2 = -t2;
        if (h(0, 0) > 0.0) {
            f.z = std::asinh(h(0, 2));
        } else {
            f.branch = 2;
            f.z = -std::asinh(h(0, 2));
        }
    }
    f.theta1 = wrap_angle(f.theta1);
    f.theta2 = wrap_angle(f.theta2);
    return f;
}

Mat2 realize(const Factorization& f)
{
    Mat2 flip = Mat2::identity();
    if (f.branch == 1) {
        flip = {1.0, 0.0, 0.0, -1.0};
    } else if (f.branch == 2) {
        flip = {0.0, 1.0, 1.0, 0.0};
    } else if (f.branch != 0) {
        throw Error(Errc::NotInGroup, "branch must be 0, 1 or 2");
    }
    const Basis e = basis();
    return exp2(f.theta1 * e.a0) * flip * exp2(f.z * e.a1) * exp2(f.theta2 * e.a0);
}

bool is_lie_automorphism(const Mat3& m)
{
    const double scale = std::max(1.0, max_abs(m));
    if (std::abs(det(m)) <= tol::alg * scale * scale * scale) {
        throw Error(Errc::Singular, "matrix is not invertible");
    }
    const Mat3 ads[3] = {adjoint_matrix(Sl2Coord{1, 0, 0}), adjoint_matrix(Sl2Coord{0, 1, 0}),
                         adjoint_matrix(Sl2Coord{0, 0, 1})};
    for (std::size_t j = 0; j < 3; ++j) {
        const Mat3 gap = m * ads[j] - adjoint_matrix(column(m, j)) * m;
        if (max_abs(gap) > tol::alg * scale * scale) return false;
    }
    return true;
}

const char* to_string(Structure s) noexcept
{
    switch (s) {
    case Structure::Elliptic: return "elliptic";
    case Structure::Hyperbolic: return "hyperbolic";
    case Structure::Degenerate: return "degenerate";
    }
    return "unknown";
}

Structure classify_structure(const Sl2Coord& b1, const Sl2Coord& b2)
{
    const double n1 = std::sqrt(b1.v0 * b1.v0 + b1.v1 * b1.v1 + b1.v2 * b1.v2);
    const double n2 = std::sqrt(b2.v0 * b2.v0 + b2.v1 * b2.v1 + b2.v2 * b2.v2);
    const double cx = b1.v1 * b2.v2 - b1.v2 * b2.v1;
    const double cy = b1.v2 * b2.v0 - b1.v0 * b2.v2;
    const double cz = b1.v0 * b2.v1 - b1.v1 * b2.v0;
    if (std::sqrt(cx * cx + cy * cy + cz * cz) <= tol::alg * n1 * n2) {
        throw Error(Errc::DependentFrame, "frame vectors are linearly dependent");
    }
    const double g11 = lorentz(b1, b1), g12 = lorentz(b1, b2), g22 = lorentz(b2, b2);
    const double gram = g11 * g22 - g12 * g12;
    const double scale = n1 * n1 * n2 * n2;
    if (gram > tol::alg * scale) return Structure::Elliptic;
    if (gram < -tol::alg * scale) return Structure::Hyperbolic;
    return Structure::Degenerate;
}

} // namespace sl2geo
