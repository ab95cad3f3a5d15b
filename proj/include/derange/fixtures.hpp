#pragma once

#include "derange/block_spec.hpp"
#include "derange/permutation.hpp"

namespace derange::fixtures {

// The bundled ((8,10),{1}) example: descends through block one, ascends
// through block two, and has no fixed points.
BlockSpec spec_8_10();
Permutation permutation_8_10();

}  // namespace derange::fixtures
