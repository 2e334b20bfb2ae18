#pragma once

#include "cli/commands.hpp"

namespace sl2geo::cli {

struct SelftestConfig {
    // mutation check: flips the sign of one Christoffel symbol in the geodesic-equation suite
    bool christoffel_fault = false;
    unsigned long long seed = 20240611ULL;
};

Outcome cmd_selftest(const SelftestConfig& cfg);

} // namespace sl2geo::cli
