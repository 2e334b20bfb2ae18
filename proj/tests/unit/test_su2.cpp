#include "sl2geo/error.hpp"
#include "sl2geo/geodesic.hpp"
#include "sl2geo/su2.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace sl2geo;
using sl2geo::testing::Gen;

namespace {

constexpr double pi = std::numbers::pi;

Errc code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::NoRoot;
}

} // namespace

TEST(Su2Geodesic, Examples)
{
    for (double s : {0.0, 0.7, 2.0, pi}) {
        const QuotientPoint p = su2_planar_geodesic(0.0, s);
        EXPECT_DOUBLE_EQ(p.x, std::cos(s));
        EXPECT_EQ(p.y, 0.0);
    }
    const QuotientPoint end = su2_planar_geodesic(0.0, pi);
    EXPECT_NEAR(end.x, -1.0, 1e-15);
    for (double w : {-3.0, 0.5, 10.0}) {
        const QuotientPoint o = su2_planar_geodesic(w, 0.0);
        EXPECT_EQ(o.x, 1.0);
        EXPECT_EQ(o.y, 0.0);
    }
}

TEST(Su2Geodesic, LandsOnTheCircle)
{
    for (double w : {-4.0, -1.0, 0.3, 1.0, 2.5}) {
        const double s = su2_landing_time(w);
        EXPECT_NEAR(s, pi / std::sqrt(1.0 + w * w), 1e-15);
        const QuotientPoint a = su2_planar_geodesic(w, s), b = su2_landing_point(w);
        const double angle = w * pi / std::sqrt(w * w + 1.0);
        EXPECT_NEAR(b.x, -std::cos(angle), 1e-15);
        EXPECT_NEAR(b.y, -std::sin(angle), 1e-15);
        EXPECT_NEAR(a.x, b.x, 1e-14);
        EXPECT_NEAR(a.y, b.y, 1e-14);
    }
}

TEST(Su2Geodesic, StaysInTheDisc)
{
    Gen g(51);
    for (int i = 0; i < 1000; ++i) {
        const QuotientPoint p = su2_planar_geodesic(g.uniform(-6, 6), g.uniform(0, 8));
        EXPECT_LE(radius_sq(p), 1.0 + 1e-12);
    }
}

TEST(Su2Geodesic, ReflectsWithOmega)
{
    Gen g(52);
    for (int i = 0; i < 200; ++i) {
        const double w = g.uniform(-5, 5), s = g.uniform(0, 4);
        const QuotientPoint a = su2_planar_geodesic(w, s), b = su2_planar_geodesic(-w, s);
        EXPECT_NEAR(a.x, b.x, 1e-14);
        EXPECT_NEAR(a.y, -b.y, 1e-14);
    }
}

TEST(Su2Geodesic, IsTheFamilyKernelAtImaginaryArguments)
{
    // c -> i omega, s -> -i s through the same kernel as the SL(2) curves
    using C = std::complex<double>;
    Gen g(53);
    for (int i = 0; i < 300; ++i) {
        const double w = g.uniform(-4, 4), s = g.uniform(0, 4);
        const auto [x, y] = detail::planar_point<C>(C(0.0, w), C(0.0, -s));
        const QuotientPoint p = su2_planar_geodesic(w, s);
        EXPECT_NEAR(x.real(), p.x, 1e-9);
        EXPECT_NEAR(y.real(), p.y, 1e-9);
        EXPECT_NEAR(x.imag(), 0.0, 1e-9);
        EXPECT_NEAR(y.imag(), 0.0, 1e-9);
    }
}

TEST(COfOmega, Examples)
{
    EXPECT_NEAR(c_of_omega(0.0), -kLandingThreshold, 1e-15);
    EXPECT_NEAR(c_of_omega(-1e-300), kLandingThreshold, 1e-15);
    EXPECT_LT(c_of_omega(1e3), -1e2);
    EXPECT_LT(c_of_omega(1e6), -1e5);
    EXPECT_GT(c_of_omega(-1e6), 1e5);
}

TEST(COfOmega, MatchesTheDisplayedFormulas)
{
    // the formulas as printed, away from the cancellation
    for (double w : {0.1, 0.5, 1.0, 3.0}) {
        const double big = std::sqrt(w * w + 1.0);
        const double want = -std::sqrt((5 * w * w + 4 - 4 * w * big) / (4 * w * w + 3 - 4 * w * big));
        EXPECT_NEAR(c_of_omega(w), want, 1e-12 * std::abs(want));
    }
    for (double w : {-0.1, -0.5, -1.0, -3.0}) {
        const double big = std::sqrt(w * w + 1.0);
        const double want = std::sqrt((5 * w * w + 4 + 4 * w * big) / (4 * w * w + 3 + 4 * w * big));
        EXPECT_NEAR(c_of_omega(w), want, 1e-12 * std::abs(want));
    }
}

TEST(COfOmega, DecreasingOnEachBranchAndOutsideTheThreshold)
{
    double prev = c_of_omega(-50.0);
    for (int i = 1; i <= 500; ++i) {
        const double w = -50.0 + 50.0 * i / 500.0 - 1e-9;
        const double c = c_of_omega(w);
        EXPECT_LT(c, prev) << w;
        EXPECT_GE(c, kLandingThreshold - 1e-15);
        prev = c;
    }
    prev = c_of_omega(0.0);
    for (int i = 1; i <= 500; ++i) {
        const double w = 50.0 * i / 500.0;
        const double c = c_of_omega(w);
        EXPECT_LT(c, prev) << w;
        EXPECT_LE(c, -kLandingThreshold + 1e-15);
        prev = c;
    }
}

TEST(COfOmega, NegativeBranchIsTheReflection)
{
    Gen g(54);
    for (int i = 0; i < 200; ++i) {
        const double w = g.uniform(1e-6, 20.0);
        EXPECT_NEAR(c_of_omega(-w), -c_of_omega(w), 1e-12 * std::abs(c_of_omega(w)));
    }
}

TEST(LandingMatch, Examples)
{
    EXPECT_LE(landing_match_error(0.0), 1e-12);
    EXPECT_LE(landing_match_error(1.0), 1e-9);
    EXPECT_LE(landing_match_error(-2.5), 1e-9);
}

TEST(LandingMatch, SampledOmegas)
{
    Gen g(55);
    for (int i = 0; i < 100; ++i) {
        const double w = g.uniform(-5, 5);
        EXPECT_LE(landing_match_error(w), 1e-9) << w;
    }
}

TEST(ReachableBoundary, SmallTimeHugsTheStart)
{
    const auto pts = reachable_boundary(0.1, 512);
    ASSERT_EQ(pts.size(), 512u);
    for (const auto& p : pts) EXPECT_LT(std::hypot(p.x - 1.0, p.y), 0.2);
    EXPECT_LT(std::hypot(pts.front().x - 1.0, pts.front().y), 1e-3);
    EXPECT_LT(std::hypot(pts.back().x - 1.0, pts.back().y), 1e-3);
}

TEST(ReachableBoundary, InsideTheDiscAndClipped)
{
    for (double s : {0.3, 1.0, 2.0, 3.5}) {
        const int n = 300;
        const auto pts = reachable_boundary(s, n);
        for (int i = 0; i < n; ++i) {
            const QuotientPoint& p = pts[static_cast<std::size_t>(i)];
            EXPECT_LE(radius_sq(p), 1.0 + 1e-9);
            const double w = std::tan(-0.5 * pi + pi * (i + 0.5) / n);
            if (s >= su2_landing_time(w)) {
                EXPECT_NEAR(radius_sq(p), 1.0, 1e-12);
            }
        }
    }
}

TEST(ReachableBoundary, Symmetric)
{
    const auto pts = reachable_boundary(1.2, 101);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_NEAR(pts[i].x, pts[pts.size() - 1 - i].x, 1e-12);
        EXPECT_NEAR(pts[i].y, -pts[pts.size() - 1 - i].y, 1e-12);
    }
}

TEST(ReachableBoundary, BadGrid)
{
    EXPECT_EQ(code_of([] { reachable_boundary(1.0, 1); }), Errc::BadGrid);
    EXPECT_EQ(code_of([] { reachable_boundary(0.0, 10); }), Errc::BadGrid);
}
