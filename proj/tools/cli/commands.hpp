#pragma once

#include "sl2geo/automorphism.hpp"
#include "sl2geo/lie.hpp"
#include "sl2geo/tolerance.hpp"

#include <optional>
#include <string>

namespace sl2geo::cli {

struct Options {
    int precision = 12;
    // unset: key=value output uses `precision`, CSV uses full double precision
    bool precision_given = false;
    bool pretty = false;
    double tol_root = tol::root;
    double tol_synth = tol::synth;
};

struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

Outcome cmd_project(const Mat2& x, const Options& opt);
Outcome cmd_solve(const Mat2& xi, const Mat2& xf, const Options& opt);
Outcome cmd_dist(double x, double y, const Options& opt);
// s_max unset means s_int(c)
Outcome cmd_path(double c, std::optional<double> s_max, int n, const Options& opt);
Outcome cmd_classify(const Mat2& x, const Options& opt);
Outcome cmd_su2(double omega, std::optional<double> s, const Options& opt);
Outcome cmd_aut_factor(const Mat3& m, const Options& opt);
Outcome cmd_aut_realize(const Factorization& f, const Options& opt);
Outcome cmd_figure(int which, const std::string& out_path);

} // namespace sl2geo::cli
