#pragma once

#include "sl2geo/quotient.hpp"

#include <vector>

namespace sl2geo {

// Quotient curve of the SU(2) geodesic with parameter omega; stays in the closed unit disc.
QuotientPoint su2_planar_geodesic(double omega, double s);

// pi / sqrt(1 + omega^2), where the curve reaches the unit circle.
double su2_landing_time(double omega);
QuotientPoint su2_landing_point(double omega);

// SL(2) parameter whose landing point matches the SU(2) one; |c| >= 2/sqrt3.
double c_of_omega(double omega);

double landing_match_error(double omega);

// Points reached at half-time s over an omega grid uniform in atan(omega);
// curves already landed contribute their landing point.
std::vector<QuotientPoint> reachable_boundary(double s, int n);

} // namespace sl2geo
