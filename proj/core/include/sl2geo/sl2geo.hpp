#pragma once

#include "sl2geo/automorphism.hpp"
#include "sl2geo/error.hpp"
#include "sl2geo/geodesic.hpp"
#include "sl2geo/lie.hpp"
#include "sl2geo/quotient.hpp"
#include "sl2geo/su2.hpp"
#include "sl2geo/synthesis.hpp"
#include "sl2geo/tolerance.hpp"
