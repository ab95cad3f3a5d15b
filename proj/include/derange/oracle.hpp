#pragma once

#include <functional>
#include <map>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/block_spec.hpp"
#include "derange/limits.hpp"
#include "derange/permutation.hpp"

namespace derange {

// Fixed points per block, in block order.
using FixedPointProfile = std::vector<int>;

// Visits the one-line word of every (A,S)-permutation exactly once, one per
// ordered distribution of the values 1..n into blocks. The visit order is
// deterministic but unspecified; the buffer is reused between visits.
void for_each_as_permutation(const BlockSpec& spec,
                             const std::function<void(const std::vector<int>&)>& visit,
                             const Limits& limits = {});

// All (A,S)-permutations, in lexicographic one-line order.
std::vector<Permutation> enumerate_as_permutations(const BlockSpec& spec,
                                                   const Limits& limits = {});

// Number of (A,S)-permutations with no fixed point anywhere.
BigInt count_derangements_oracle(const BlockSpec& spec, const Limits& limits = {});

// Histogram of (A,S)-permutations by fixed points per block; the values sum
// to multinomial(n; a).
std::map<FixedPointProfile, BigInt> count_by_fixed_point_profile(const BlockSpec& spec,
                                                                 const Limits& limits = {});

// Sums over all of S_n, not just the (A,S)-permutations.
BigInt sum_small_cycle_weights(const BlockSpec& spec, const Limits& limits = {});
BigInt sum_acceptable_weights(const BlockSpec& spec, const Limits& limits = {});

// Number of pi in S_n with no small cycles in ascending blocks and even
// total small-cycle length in every descending block.
BigInt count_even_small_totals(const BlockSpec& spec, const Limits& limits = {});

}  // namespace derange
