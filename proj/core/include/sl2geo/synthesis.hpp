#pragma once

#include "sl2geo/lie.hpp"
#include "sl2geo/quotient.hpp"
#include "sl2geo/tolerance.hpp"

namespace sl2geo {

enum class CutLocusClass { Regular, SingularCircle, NegativeAxisSegment, StartPoint };

const char* to_string(CutLocusClass c) noexcept;

CutLocusClass classify_point(const QuotientPoint& p);
// Throws NotUnimodular.
CutLocusClass classify_cut_locus(const Mat2& x);

struct ClassDistance {
    double t_f = 0.0;
    double c = 0.0;
    double s = 0.0;
    // reached by more than one minimizer; c is one representative
    bool on_cut_locus = false;
};

// Minimizing geodesic from (1,0) to p in the quotient. Unreachable inside the disc,
// StartPoint at (1,0). The fan is bisected in c down to root_tol * max(1, c).
ClassDistance distance_to_class(const QuotientPoint& p, double root_tol = tol::root);

struct SynthesisSolution {
    double c = 0.0;
    double t_f = 0.0;
    Mat2 p;
    Mat2 k = Mat2::identity();
    double residual = 0.0;
    bool on_cut_locus = false;
};

// Minimizer from xi to xf: t -> lift(c, P, t) * xi reaches xf at t = t_f.
SynthesisSolution solve(const Mat2& xi, const Mat2& xf, double root_tol = tol::root);

double verify_solution(const SynthesisSolution& sol, const Mat2& xi, const Mat2& xf);

} // namespace sl2geo
