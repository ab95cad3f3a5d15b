#pragma once

#include <functional>
#include <vector>

namespace derange {

// All compositions of n into positive parts, in cut-mask order; n <= 0
// yields nothing.
void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& fn);

// All subsets of {1,...,k} as sorted index vectors, in mask order.
void for_each_subset(int k, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace derange
