#include "cli/selftest.hpp"

#include "cli/format.hpp"
#include "sl2geo/sl2geo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace sl2geo::cli {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Mat2 random_traceless(Rng& rng, double scale)
{
    return to_matrix({uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)});
}

Mat2 random_group(Rng& rng) { return exp2(random_traceless(rng, 1.5)) * exp2(random_traceless(rng, 1.5)); }

// worst value seen and the limit it must stay under
struct Check {
    double worst = 0.0;
    double limit;
    void see(double v) { worst = std::max(worst, std::isnan(v) ? INFINITY : v); }
    bool ok() const { return worst <= limit; }
};

struct SuiteResult {
    bool pass;
    std::string detail;
};

SuiteResult verdict(const Check& c)
{
    return {c.ok(), "worst=" + number(c.worst, 3) + " limit=" + number(c.limit, 3)};
}

SuiteResult lie_suite(Rng& rng)
{
    Check c{0.0, 1e-10};
    for (int i = 0; i < 200; ++i) {
        const Mat2 m = random_traceless(rng, 2.0);
        const double t = uniform(rng, -2, 2), s = uniform(rng, -2, 2);
        const Mat2 et = exp2(t * m), es = exp2(s * m), ets = exp2((t + s) * m);
        c.see(std::abs(det(et) - 1.0) / std::max(1.0, max_abs(et) * max_abs(et)));
        c.see(max_abs(et * es - ets) / std::max(1.0, max_abs(ets)));
        const Mat2 x = random_traceless(rng, 1), y = random_traceless(rng, 1), z = random_traceless(rng, 1);
        c.see(max_abs(bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))));
        c.see(max_abs(adjoint_matrix(bracket(x, y)) -
                      (adjoint_matrix(x) * adjoint_matrix(y) - adjoint_matrix(y) * adjoint_matrix(x))));
    }
    return verdict(c);
}

SuiteResult quotient_suite(Rng& rng)
{
    Check c{0.0, 1e-9};
    for (int i = 0; i < 200; ++i) {
        const Mat2 x = random_group(rng);
        const QuotientPoint p = project(x);
        const QuotientPoint pinv = project(inverse(x));
        c.see(std::abs(pinv.x - p.x) + std::abs(pinv.y + p.y));
        const Mat2 k = rotation(uniform(rng, -std::numbers::pi, std::numbers::pi));
        const Mat2 conj = k * x * transpose(k);
        const QuotientPoint pc = project(conj);
        c.see(std::abs(pc.x - p.x) + std::abs(pc.y - p.y));
        if (radius_sq(p) > 1.0 + 1e-6) {
            const auto [f1, f2] = pushforward_frame(x);
            const double g = quotient_metric(p).a;
            c.see(std::abs(g * (f1.dx * f1.dx + f1.dy * f1.dy) - 1.0));
            c.see(std::abs(g * (f2.dx * f2.dx + f2.dy * f2.dy) - 1.0));
            c.see(std::abs(g * (f1.dx * f2.dx + f1.dy * f2.dy)));
            const RotationMatch r = recover_rotation(x, conj);
            c.see(max_abs(r.k * x * transpose(r.k) - conj) / std::max(1.0, max_abs(x)));
        }
    }
    return verdict(c);
}

SuiteResult equation_suite(bool fault)
{
    Check c{0.0, 1e-8};
    for (double cc : {0.3, 0.9, 1.0, 1.1, kOrthogonalCrossing, 1.5, 5.0}) {
        const double end = s_int(cc);
        for (int i = 0; i < 25; ++i) {
            const double s = 0.1 + (0.97 * end - 0.1) * i / 24.0;
            const CurveJet j = planar_jet(cc, s);
            Christoffel g = christoffel({j.x, j.y});
            if (fault) g.gamma[0][0][0] = -g.gamma[0][0][0];
            const double v[2] = {0.5 * j.dx, 0.5 * j.dy};
            const double acc[2] = {0.25 * j.ddx, 0.25 * j.ddy};
            for (int a = 0; a < 2; ++a) {
                double rhs = 0.0;
                for (int b = 0; b < 2; ++b) {
                    for (int d = 0; d < 2; ++d) rhs -= g(a, b, d) * v[b] * v[d];
                }
                c.see(std::abs(acc[a] - rhs) / std::max(1.0, std::abs(acc[a])));
            }
        }
    }
    return verdict(c);
}

SuiteResult family_suite()
{
    Check c{0.0, 1e-6};
    double prev = INFINITY;
    for (int i = 0; i < 40; ++i) {
        const double cc = 0.02 + 0.97 * i / 39.0;
        const double s = s_int(cc);
        if (!(s < prev)) c.see(INFINITY);
        prev = s;
    }
    c.see(std::abs(s_int(1.0 - 1e-9) - s_int(1.0)));
    c.see(std::abs(s_int(1.0 + 1e-9) - s_int(1.0)));
    const double red = kOrthogonalCrossing, mid = std::sqrt(2.0) * std::numbers::pi;
    for (int i = 0; i <= 10; ++i) {
        const double t = mid * i / 10.0;
        const QuotientPoint a = planar_geodesic(red, mid - t), b = planar_geodesic(-red, mid + t);
        c.see(std::hypot(a.x - b.x, a.y - b.y));
    }
    return verdict(c);
}

SuiteResult synthesis_suite(Rng& rng)
{
    Check c{0.0, 1e-6};
    for (int i = 0; i < 20; ++i) {
        double cc = uniform(rng, 0.2, 3.0);
        if (rng() & 1) cc = -cc;
        const double t = 2.0 * s_int(cc) * uniform(rng, 0.05, 0.95);
        const Mat2 xf = lift({cc, uniform(rng, -std::numbers::pi, std::numbers::pi)}, t);
        const SynthesisSolution sol = solve(Mat2::identity(), xf);
        c.see(std::abs(sol.c - cc));
        c.see(std::abs(sol.t_f - t));
        c.see(sol.residual / std::max(1.0, max_abs(xf)));
    }
    return verdict(c);
}

SuiteResult su2_suite(Rng& rng)
{
    Check c{0.0, 1e-9};
    for (int i = 0; i < 20; ++i) {
        const double w = uniform(rng, -5, 5), s = uniform(rng, 0, 3);
        c.see(landing_match_error(w));
        const QuotientPoint a = su2_planar_geodesic(w, s), b = su2_planar_geodesic(-w, s);
        c.see(std::abs(a.x - b.x) + std::abs(a.y + b.y));
        c.see(std::max(0.0, radius_sq(a) - 1.0));
    }
    return verdict(c);
}

SuiteResult automorphism_suite(Rng& rng)
{
    Check c{0.0, 1e-9};
    for (int i = 0; i < 20; ++i) {
        const Factorization f{uniform(rng, -3, 3), static_cast<int>(rng() % 3), uniform(rng, -2, 2), uniform(rng, -3, 3)};
        const Mat3 m = assemble(f);
        c.see(max_abs(assemble(factorize(m)) - m));
        c.see(max_abs(aut_matrix_from_group(realize(f)) - m));
        if (!is_so12(m) || !is_lie_automorphism(m)) c.see(INFINITY);
        Mat3 bad = m;
        bad(rng() % 3, rng() % 3) += uniform(rng, 0.01, 0.1);
        if (is_so12(bad) != is_lie_automorphism(bad)) c.see(INFINITY);
    }
    return verdict(c);
}

} // namespace

Outcome cmd_selftest(const SelftestConfig& cfg)
{
    Rng rng(cfg.seed);
    struct Suite {
        const char* name;
        std::function<SuiteResult()> run;
    };
    const std::vector<Suite> suites = {
        {"lie_core", [&] { return lie_suite(rng); }},
        {"quotient", [&] { return quotient_suite(rng); }},
        {"geodesic_equation", [&] { return equation_suite(cfg.christoffel_fault); }},
        {"geodesic_family", [] { return family_suite(); }},
        {"synthesis", [&] { return synthesis_suite(rng); }},
        {"su2_bridge", [&] { return su2_suite(rng); }},
        {"automorphisms", [&] { return automorphism_suite(rng); }},
    };
    Outcome out;
    for (const auto& suite : suites) {
        SuiteResult r;
        try {
            r = suite.run();
        } catch (const Error& e) {
            r = {false, std::string("threw ") + e.what()};
        }
        out.out += std::string(r.pass ? "PASS " : "FAIL ") + suite.name + " " + r.detail + "\n";
        if (!r.pass) out.exit_code = 1;
    }
    return out;
}

} // namespace sl2geo::cli
