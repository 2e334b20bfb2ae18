#pragma once

#include "sl2geo/lie.hpp"

namespace sl2geo {

// diag(-1, 1, 1)
Mat3 lorentz_form();

// Generators acting on coordinates in {A0, A1, A2}; column j is the image of Aj.
Mat3 rotation_o(double theta);  // [[1,0,0],[0,c,s],[0,-s,c]]
Mat3 boost_h(double z);         // [[ch,0,sh],[0,1,0],[sh,0,ch]]
Mat3 reflection_i(int branch);  // 0: identity, 1: diag(-1,-1,1), 2: diag(-1,1,-1)

// M^T J M = J and det M = 1, with J = lorentz_form().
bool is_so12(const Mat3& m);

// Matrix of A -> K A K^-1; NotUnitDeterminant unless det K = +-1.
Mat3 aut_matrix_from_group(const Mat2& k);

struct Factorization {
    double theta1 = 0.0;
    int branch = 0;
    double z = 0.0;
    double theta2 = 0.0;
};

// O(theta1) I^branch H(z) O(theta2)
Mat3 assemble(const Factorization& f);

// NotInGroup unless is_so12(m). Angles come back in (-pi, pi].
Factorization factorize(const Mat3& m);

// Element of SL(2) or of its det -1 coset whose conjugation action is assemble(f).
Mat2 realize(const Factorization& f);

// M [A, B] = [M A, M B] on the basis; Singular for non-invertible m.
bool is_lie_automorphism(const Mat3& m);

enum class Structure { Elliptic, Hyperbolic, Degenerate };

const char* to_string(Structure s) noexcept;

// Sign type of the form v^T J w on span{b1, b2}; DependentFrame for parallel vectors.
Structure classify_structure(const Sl2Coord& b1, const Sl2Coord& b2);

} // namespace sl2geo
