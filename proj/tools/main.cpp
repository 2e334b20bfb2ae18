#include "cli/commands.hpp"
#include "cli/selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using sl2geo::Mat2;
using sl2geo::Mat3;

Mat2 as_mat2(const std::vector<double>& v, std::size_t off = 0)
{
    return {v[off], v[off + 1], v[off + 2], v[off + 3]};
}

int emit(const sl2geo::cli::Outcome& o)
{
    std::cout << o.out;
    std::cerr << o.err;
    return o.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    namespace cli = sl2geo::cli;

    CLI::App app{"Sub-Riemannian geodesics on SL(2,R) with the K-P structure"};
    app.set_version_flag("--version", "sl2geo 0.1.0");
    app.require_subcommand(1);
    app.fallthrough();

    cli::Options opt;
    auto* prec = app.add_option("--precision", opt.precision, "Significant digits of printed numbers")
                     ->check(CLI::Range(1, 17))
                     ->capture_default_str();
    app.add_flag("--pretty", opt.pretty, "One field per line");
    app.add_option("--tol-root", opt.tol_root, "Root bracketing tolerance")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--tol-synth", opt.tol_synth, "Endpoint residual accepted by solve")->check(CLI::PositiveNumber)->capture_default_str();

    std::vector<double> nums;
    std::string out_path;
    int exit_code = 0;

    auto* project = app.add_subcommand("project", "Quotient point and stratum of an SL(2) matrix");
    project->add_option("matrix", nums, "a b c d, row-major")->expected(4)->required();
    project->callback([&] { exit_code = emit(cli::cmd_project(as_mat2(nums), opt)); });

    auto* solve = app.add_subcommand("solve", "Minimizing geodesic between two SL(2) matrices");
    solve->add_option("matrices", nums, "initial then final matrix, 8 reals row-major")->expected(8)->required();
    solve->callback([&] { exit_code = emit(cli::cmd_solve(as_mat2(nums), as_mat2(nums, 4), opt)); });

    double px = 0.0, py = 0.0;
    auto* dist = app.add_subcommand("dist", "Distance from the identity class to a quotient point");
    dist->add_option("x", px)->required();
    dist->add_option("y", py)->required();
    dist->callback([&] { exit_code = emit(cli::cmd_dist(px, py, opt)); });

    double pc = 0.0;
    std::string smax_text = "auto";
    int samples = 200;
    auto* path = app.add_subcommand("path", "CSV samples s,x,y of a planar geodesic");
    path->add_option("c", pc)->required();
    path->add_option("s_max", smax_text, "End of the sampled interval, or auto for the cut time")->capture_default_str();
    path->add_option("n", samples, "Number of samples")->capture_default_str();
    path->add_option("--out", out_path, "Write the CSV to a file");
    path->callback([&] {
        opt.precision_given = prec->count() > 0;
        std::optional<double> smax;
        if (smax_text != "auto") {
            try {
                smax = std::stod(smax_text);
            } catch (const std::exception&) {
                std::cerr << "error: s_max must be a number or auto\n";
                exit_code = 2;
                return;
            }
        }
        auto o = cli::cmd_path(pc, smax, samples, opt);
        if (o.exit_code == 0 && !out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            f << o.out;
            if (!f) {
                std::cerr << "error: cannot write " << out_path << "\n";
                exit_code = 2;
                return;
            }
            o.out.clear();
        }
        exit_code = emit(o);
    });

    auto* classify = app.add_subcommand("classify", "Cut-locus class of an SL(2) matrix");
    classify->add_option("matrix", nums, "a b c d, row-major")->expected(4)->required();
    classify->callback([&] { exit_code = emit(cli::cmd_classify(as_mat2(nums), opt)); });

    int which = 1;
    auto* figure = app.add_subcommand("figure", "Write an SVG figure");
    figure->add_option("which", which, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
    figure->add_option("--out", out_path, "Output SVG path (default figure<which>.svg)");
    figure->callback([&] {
        if (out_path.empty()) out_path = "figure" + std::to_string(which) + ".svg";
        exit_code = emit(cli::cmd_figure(which, out_path));
    });

    double omega = 0.0;
    std::optional<double> su2_s;
    auto* su2 = app.add_subcommand("su2", "SU(2) geodesic, matching c and landing check");
    su2->add_option("omega", omega)->required();
    su2->add_option("s", su2_s, "Half-time at which to evaluate the SU(2) curve");
    su2->callback([&] { exit_code = emit(cli::cmd_su2(omega, su2_s, opt)); });

    auto* aut_factor = app.add_subcommand("aut-factor", "Factor a 3x3 automorphism matrix as O I H O");
    aut_factor->add_option("matrix", nums, "9 reals, row-major")->expected(9)->required();
    aut_factor->callback([&] {
        Mat3 m;
        for (std::size_t i = 0; i < 9; ++i) m.m[i] = nums[i];
        exit_code = emit(cli::cmd_aut_factor(m, opt));
    });

    sl2geo::Factorization fac;
    auto* aut_realize = app.add_subcommand("aut-realize", "Conjugating 2x2 matrix of a factored automorphism");
    aut_realize->add_option("theta1", fac.theta1)->required();
    aut_realize->add_option("branch", fac.branch)->required()->check(CLI::IsMember({0, 1, 2}));
    aut_realize->add_option("z", fac.z)->required();
    aut_realize->add_option("theta2", fac.theta2)->required();
    aut_realize->callback([&] { exit_code = emit(cli::cmd_aut_realize(fac, opt)); });

    cli::SelftestConfig st;
    std::string fault;
    auto* selftest = app.add_subcommand("selftest", "Run the reduced invariant suites");
    selftest->add_option("--inject-fault", fault)->check(CLI::IsMember({"christoffel-sign"}))->group("");
    selftest->callback([&] {
        st.christoffel_fault = fault == "christoffel-sign";
        exit_code = emit(cli::cmd_selftest(st));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    return exit_code;
}
