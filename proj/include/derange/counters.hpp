#pragma once

#include <vector>

#include "derange/bigint.hpp"
#include "derange/block_spec.hpp"

namespace derange {

BigInt factorial(int n);
BigInt binomial(int n, int k);

// (sum parts)! / prod(parts_i!); the empty sequence gives 1, any negative
// part gives 0.
BigInt multinomial(const std::vector<int>& parts);

// D_n: D_0 = 1, D_1 = 0, D_n = (n-1)(D_{n-1} + D_{n-2}).
BigInt derangement_number(int n);

// Derangement count by the closed inclusion-exclusion sum over the b-lattice
// with per-block caps l_i = 1 for ascending blocks and l_i = a_i for
// descending ones. Visits the lattice in odometer order, no early exit.
BigInt count_sum(const BlockSpec& spec);

// Number of (A,S)-permutations with no fixed points in blocks 1..j, by the
// inverted block recursion, memoized per call on (level, sizes).
BigInt count_recursion_partial(const BlockSpec& spec, int j);

// count_recursion_partial at j = k: the derangement count.
BigInt count_recursion(const BlockSpec& spec);

}  // namespace derange
