#include "derange/fixtures.hpp"

namespace derange::fixtures {

BlockSpec spec_8_10() { return BlockSpec({8, 10}, {1}); }

Permutation permutation_8_10() {
    return Permutation({18, 17, 15, 14, 13, 12, 11, 9, 1, 2, 3, 4, 5, 6, 7, 8, 10, 16});
}

}  // namespace derange::fixtures
