#include "sl2geo/error.hpp"
#include "sl2geo/lie.hpp"
#include "sl2geo/tolerance.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace sl2geo;
using sl2geo::testing::Gen;

namespace {

void expect_near(const Mat2& x, const Mat2& y, double tol)
{
    EXPECT_NEAR(x.a, y.a, tol);
    EXPECT_NEAR(x.b, y.b, tol);
    EXPECT_NEAR(x.c, y.c, tol);
    EXPECT_NEAR(x.d, y.d, tol);
}

void expect_near(const Mat3& x, const Mat3& y, double tol)
{
    for (std::size_t i = 0; i < 9; ++i) EXPECT_NEAR(x.m[i], y.m[i], tol) << "entry " << i;
}

Mat3 rows(std::initializer_list<double> v)
{
    Mat3 m;
    std::size_t i = 0;
    for (double x : v) m.m[i++] = x;
    return m;
}

} // namespace

TEST(Basis, EntriesAreHalvesOfTheStandardMatrices)
{
    const Basis e = basis();
    EXPECT_EQ(e.a2, (Mat2{0.5, 0.0, 0.0, -0.5}));
    EXPECT_EQ(e.a0, (Mat2{0.0, -0.5, 0.5, 0.0}));
    EXPECT_EQ(e.a1, (Mat2{0.0, 0.5, 0.5, 0.0}));
}

TEST(Basis, Traceless)
{
    const Basis e = basis();
    EXPECT_EQ(trace(e.a0), 0.0);
    EXPECT_EQ(trace(e.a1), 0.0);
    EXPECT_EQ(trace(e.a2), 0.0);
}

TEST(Basis, A1SquaredIsQuarterIdentity)
{
    const Mat2 a1 = basis().a1;
    EXPECT_EQ(a1 * a1, 0.25 * Mat2::identity());
}

TEST(Bracket, CommutationRelations)
{
    const Basis e = basis();
    EXPECT_EQ(bracket(e.a0, e.a1), -e.a2);
    EXPECT_EQ(bracket(e.a1, e.a2), e.a0);
    EXPECT_EQ(bracket(e.a0, e.a2), e.a1);
    EXPECT_EQ(bracket(e.a1, e.a1), Mat2::zero());
}

TEST(Bracket, BilinearAntisymmetricJacobi)
{
    Gen g(11);
    for (int i = 0; i < 300; ++i) {
        const Mat2 x = g.traceless(2), y = g.traceless(2), z = g.traceless(2);
        const double s = g.uniform(-3, 3), t = g.uniform(-3, 3);
        EXPECT_LE(max_abs(bracket(s * x + t * y, z) - (s * bracket(x, z) + t * bracket(y, z))), 1e-12);
        EXPECT_LE(max_abs(bracket(x, y) + bracket(y, x)), 1e-12);
        const Mat2 jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        EXPECT_LE(max_abs(jac), 1e-12);
    }
}

TEST(Metric, BasisIsOrthonormal)
{
    const Basis e = basis();
    EXPECT_DOUBLE_EQ(metric_g(e.a1, e.a1), 1.0);
    EXPECT_DOUBLE_EQ(metric_g(e.a2, e.a2), 1.0);
    EXPECT_DOUBLE_EQ(metric_g(e.a0, e.a0), 1.0);
    EXPECT_DOUBLE_EQ(metric_g(e.a1, e.a2), 0.0);
    EXPECT_DOUBLE_EQ(metric_g(e.a0, e.a1), 0.0);
}

TEST(Exp2, Examples)
{
    const Basis e = basis();
    EXPECT_EQ(exp2(Mat2::zero()), Mat2::identity());
    expect_near(exp2(e.a1), {std::cosh(0.5), std::sinh(0.5), std::sinh(0.5), std::cosh(0.5)}, 1e-15);
    expect_near(exp2(std::numbers::pi * e.a0), {0.0, -1.0, 1.0, 0.0}, 1e-15);
}

TEST(Exp2, AgreesWithPowerSeries)
{
    Gen g(12);
    for (int i = 0; i < 500; ++i) {
        const Mat2 m = g.traceless(3);
        const Mat2 want = sl2geo::testing::series_exp(m);
        EXPECT_LE(max_abs(exp2(m) - want), 1e-12 * std::max(1.0, max_abs(want)));
    }
}

TEST(Exp2, ContinuousAcrossSeriesSwitch)
{
    // nilpotent direction plus a tiny elliptic or hyperbolic part straddling |det| = 1e-8
    for (double q : {-1.0000001e-8, -0.9999999e-8, 0.9999999e-8, 1.0000001e-8, 1e-20, -1e-20}) {
        const Mat2 m{0.0, 1.0, -q, 0.0};
        const Mat2 want = sl2geo::testing::series_exp(m);
        EXPECT_LE(max_abs(exp2(m) - want), 4e-16) << "det " << q;
    }
}

TEST(Exp2, UnimodularAndOneParameterGroup)
{
    Gen g(13);
    for (int i = 0; i < 300; ++i) {
        const Mat2 m = g.traceless(2);
        const double t = g.uniform(-2, 2), s = g.uniform(-2, 2);
        const Mat2 et = exp2(t * m), es = exp2(s * m), both = exp2((t + s) * m);
        EXPECT_TRUE(is_unimodular(et, 10 * tol::det)) << det(et);
        EXPECT_LE(max_abs(et * es - both), 1e-12 * std::max(1.0, max_abs(both)));
    }
}

TEST(Coordinates, RoundTrip)
{
    Gen g(14);
    for (int i = 0; i < 100; ++i) {
        const Sl2Coord v{g.uniform(-5, 5), g.uniform(-5, 5), g.uniform(-5, 5)};
        const Sl2Coord w = to_coord(to_matrix(v));
        EXPECT_NEAR(w.v0, v.v0, 1e-12);
        EXPECT_NEAR(w.v1, v.v1, 1e-12);
        EXPECT_NEAR(w.v2, v.v2, 1e-12);
    }
    const Basis e = basis();
    EXPECT_EQ(to_coord(e.a0), (Sl2Coord{1, 0, 0}));
    EXPECT_EQ(to_coord(e.a1), (Sl2Coord{0, 1, 0}));
    EXPECT_EQ(to_coord(e.a2), (Sl2Coord{0, 0, 1}));
}

TEST(Adjoint, ColumnsAreBracketCoordinates)
{
    Gen g(15);
    const Basis e = basis();
    const Mat2 gens[3] = {e.a0, e.a1, e.a2};
    for (int i = 0; i < 50; ++i) {
        const Mat2 a = g.traceless(2);
        const Mat3 ad = adjoint_matrix(a);
        for (std::size_t j = 0; j < 3; ++j) {
            const Sl2Coord col = to_coord(bracket(a, gens[j]));
            EXPECT_NEAR(ad(0, j), col.v0, 1e-13);
            EXPECT_NEAR(ad(1, j), col.v1, 1e-13);
            EXPECT_NEAR(ad(2, j), col.v2, 1e-13);
        }
    }
}

// The reference displays ad(A0) and ad(A1) with a leading 1/2; with the commutation
// relations above ([A0, A1] = -A2 puts -1 in the last slot of column 1) the true
// matrices are twice those displays.
TEST(Adjoint, DisplayedMatricesAreHalfTheTrueOnes)
{
    const Mat3 shown0 = 0.5 * rows({0, 0, 0, 0, 0, 1, 0, -1, 0});
    const Mat3 shown1 = 0.5 * rows({0, 0, 1, 0, 0, 0, 1, 0, 0});
    expect_near(adjoint_matrix(Sl2Coord{1, 0, 0}), 2.0 * shown0, 0.0);
    expect_near(adjoint_matrix(Sl2Coord{0, 1, 0}), 2.0 * shown1, 0.0);
    expect_near(adjoint_matrix(Sl2Coord{0, 0, 0}), Mat3{}, 0.0);
}

TEST(Adjoint, RepresentationProperty)
{
    Gen g(16);
    for (int i = 0; i < 300; ++i) {
        const Mat2 a = g.traceless(2), b = g.traceless(2);
        const Mat3 lhs = adjoint_matrix(bracket(a, b));
        const Mat3 rhs = adjoint_matrix(a) * adjoint_matrix(b) - adjoint_matrix(b) * adjoint_matrix(a);
        EXPECT_LE(max_abs(lhs - rhs), 1e-12);
    }
}

TEST(Adjoint, Linear)
{
    Gen g(17);
    for (int i = 0; i < 50; ++i) {
        const Mat2 a = g.traceless(2), b = g.traceless(2);
        const double s = g.uniform(-2, 2);
        EXPECT_LE(max_abs(adjoint_matrix(s * a + b) - (s * adjoint_matrix(a) + adjoint_matrix(b))), 1e-13);
    }
}

TEST(Mat2Ops, InverseAndUnimodularity)
{
    const Mat2 x{2, 1, 1, 1};
    EXPECT_EQ(x * inverse(x), Mat2::identity());
    EXPECT_TRUE(is_unimodular(x));
    EXPECT_FALSE(is_unimodular({1, 0, 0, 0.5}));
    EXPECT_THROW(inverse(Mat2::zero()), Error);
}
