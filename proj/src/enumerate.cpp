#include "derange/enumerate.hpp"

#include <cstdint>

namespace derange {

void for_each_composition(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n <= 0) return;
    std::vector<int> parts;
    for (std::uint32_t cuts = 0; cuts < (std::uint32_t{1} << (n - 1)); ++cuts) {
        parts.clear();
        int run = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (cuts & (std::uint32_t{1} << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        fn(parts);
    }
}

void for_each_subset(int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> subset;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        subset.clear();
        for (int i = 0; i < k; ++i)
            if (mask & (std::uint32_t{1} << i)) subset.push_back(i + 1);
        fn(subset);
    }
}

}  // namespace derange
