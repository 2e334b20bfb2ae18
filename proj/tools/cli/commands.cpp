#include "cli/commands.hpp"

#include "cli/figures.hpp"
#include "cli/format.hpp"
#include "sl2geo/sl2geo.hpp"

#include <cmath>
#include <fstream>
#include <functional>

namespace sl2geo::cli {

namespace {

Outcome guarded(const std::function<Outcome()>& body)
{
    try {
        return body();
    } catch (const Error& e) {
        return {2, {}, std::string("error: ") + e.what() + "\n"};
    }
}

void add_matrix(Record& rec, const std::string& name, const Mat2& m, int prec)
{
    rec.add(name + "00", m.a, prec);
    rec.add(name + "01", m.b, prec);
    rec.add(name + "10", m.c, prec);
    rec.add(name + "11", m.d, prec);
}

} // namespace

Outcome cmd_project(const Mat2& x, const Options& opt)
{
    return guarded([&] {
        const QuotientPoint p = project(x);
        Record rec;
        rec.add("x", p.x, opt.precision);
        rec.add("y", p.y, opt.precision);
        rec.add("stratum", std::string(to_string(stratum(p))));
        return Outcome{0, rec.render(opt.pretty), {}};
    });
}

Outcome cmd_solve(const Mat2& xi, const Mat2& xf, const Options& opt)
{
    return guarded([&] {
        const SynthesisSolution sol = solve(xi, xf, opt.tol_root);
        Record rec;
        rec.add("c", sol.c, opt.precision);
        rec.add("t_f", sol.t_f, opt.precision);
        add_matrix(rec, "P", sol.p, opt.precision);
        add_matrix(rec, "K", sol.k, opt.precision);
        rec.add("residual", sol.residual, opt.precision);
        rec.add("cut_flag", sol.on_cut_locus);
        Outcome o{0, rec.render(opt.pretty), {}};
        if (!(sol.residual <= opt.tol_synth)) {
            o.exit_code = 1;
            o.err = "error: endpoint residual " + number(sol.residual, 3) + " exceeds tolerance " +
                    number(opt.tol_synth, 3) + "\n";
        }
        return o;
    });
}

Outcome cmd_dist(double x, double y, const Options& opt)
{
    return guarded([&] {
        const ClassDistance d = distance_to_class({x, y}, opt.tol_root);
        Record rec;
        rec.add("c", d.c, opt.precision);
        rec.add("s", d.s, opt.precision);
        rec.add("t_f", d.t_f, opt.precision);
        rec.add("cut_flag", d.on_cut_locus);
        return Outcome{0, rec.render(opt.pretty), {}};
    });
}

Outcome cmd_path(double c, std::optional<double> s_max, int n, const Options& opt)
{
    return guarded([&] {
        const double end = s_max ? *s_max : s_int(c, opt.tol_root);
        const auto samples = sample_path(c, end, n);
        const int prec = opt.precision_given ? opt.precision : 17;
        std::string out = "s,x,y\n";
        for (const auto& p : samples) {
            out += number(p.s, prec) + "," + number(p.x, prec) + "," + number(p.y, prec) + "\n";
        }
        return Outcome{0, out, {}};
    });
}

Outcome cmd_classify(const Mat2& x, const Options& opt)
{
    return guarded([&] {
        const QuotientPoint p = project(x);
        Record rec;
        rec.add("x", p.x, opt.precision);
        rec.add("y", p.y, opt.precision);
        rec.add("class", std::string(to_string(classify_point(p))));
        return Outcome{0, rec.render(opt.pretty), {}};
    });
}

Outcome cmd_su2(double omega, std::optional<double> s, const Options& opt)
{
    return guarded([&] {
        Record rec;
        rec.add("omega", omega, opt.precision);
        rec.add("c", c_of_omega(omega), opt.precision);
        rec.add("landing_s", su2_landing_time(omega), opt.precision);
        const QuotientPoint land = su2_landing_point(omega);
        rec.add("landing_x", land.x, opt.precision);
        rec.add("landing_y", land.y, opt.precision);
        rec.add("match_error", landing_match_error(omega), opt.precision);
        if (s) {
            const QuotientPoint p = su2_planar_geodesic(omega, *s);
            rec.add("s", *s, opt.precision);
            rec.add("x", p.x, opt.precision);
            rec.add("y", p.y, opt.precision);
        }
        return Outcome{0, rec.render(opt.pretty), {}};
    });
}

Outcome cmd_aut_factor(const Mat3& m, const Options& opt)
{
    return guarded([&] {
        const Factorization f = factorize(m);
        Record rec;
        rec.add("theta1", f.theta1, opt.precision);
        rec.add("branch", f.branch);
        rec.add("z", f.z, opt.precision);
        rec.add("theta2", f.theta2, opt.precision);
        rec.add("error", max_abs(assemble(f) - m), opt.precision);
        return Outcome{0, rec.render(opt.pretty), {}};
    });
}

Outcome cmd_aut_realize(const Factorization& f, const Options& opt)
{
    return guarded([&] {
        const Mat2 k = realize(f);
        const Mat3 m = aut_matrix_from_group(k);
        Record rec;
        add_matrix(rec, "K", k, opt.precision);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                rec.add("M" + std::to_string(i) + std::to_string(j), m(i, j), opt.precision);
            }
        }
        return Outcome{0, rec.render(opt.pretty), {}};
    });
}

Outcome cmd_figure(int which, const std::string& out_path)
{
    return guarded([&] {
        if (which < 1 || which > 3) {
            return Outcome{2, {}, "error: figure must be 1, 2 or 3\n"};
        }
        const std::string svg = figure_svg(which);
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            return Outcome{2, {}, "error: cannot open " + out_path + " for writing\n"};
        }
        f << svg;
        f.close();
        if (!f) {
            return Outcome{2, {}, "error: failed writing " + out_path + "\n"};
        }
        return Outcome{0, "wrote=" + out_path + "\n", {}};
    });
}

} // namespace sl2geo::cli
