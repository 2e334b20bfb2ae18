#pragma once

#include <string>

namespace sl2geo::cli {

// SVG text of figure 1 (geodesic fan), 2 (bisection toward (0, 1.5)) or 3 (SU(2) reachable sets).
std::string figure_svg(int which);

} // namespace sl2geo::cli
