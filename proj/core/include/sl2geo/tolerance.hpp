#pragma once

namespace sl2geo::tol {

// group / algebra membership
inline constexpr double det = 1e-12;
inline constexpr double alg = 1e-12;
// series switch for the 2x2 exponential, |det M| below this
inline constexpr double exp_series = 1e-8;
// half-width of the band around the unit circle
inline constexpr double quotient = 1e-9;
// |1 - c^2| band where the geodesic kernel is evaluated by series
inline constexpr double c_band = 1e-6;
inline constexpr double root = 1e-12;
inline constexpr double synth = 1e-6;
// projections compared before recovering a rotation, relative to max(1, |p|)
inline constexpr double match = 1e-8;

} // namespace sl2geo::tol
