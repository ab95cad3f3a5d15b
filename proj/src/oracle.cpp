#include "derange/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>

namespace derange {

namespace {

void check_enumeration_limit(const char* what, const BlockSpec& spec, const Limits& limits) {
    if (spec.total_size() > limits.enumeration_n)
        throw LimitError(what, spec.total_size(), limits.enumeration_n);
}

void check_scan_limit(const char* what, const BlockSpec& spec, const Limits& limits) {
    if (spec.total_size() > limits.full_scan_n)
        throw LimitError(what, spec.total_size(), limits.full_scan_n);
}

// Walks the ordered distributions of 1..n into the blocks; each distribution
// determines one (A,S)-permutation once every block is sorted its way.
// Per-level buffers are preallocated so the hot loop does not allocate.
class DistributionEnumerator {
public:
    DistributionEnumerator(const BlockSpec& spec,
                           const std::function<void(const std::vector<int>&)>& visit)
        : spec_(spec), visit_(visit), word_(spec.total_size()) {
        const int k = spec.block_count();
        pool_.resize(k + 1);
        choice_.resize(k + 1);
        pool_[0].resize(spec.total_size());
        std::iota(pool_[0].begin(), pool_[0].end(), 1);
        for (int b = 1; b <= k; ++b) {
            pool_[b].resize(pool_[b - 1].size() - spec.sizes()[b - 1]);
            choice_[b].resize(spec.sizes()[b - 1]);
        }
    }

    void run() { descend(1); }

private:
    void descend(int block) {
        if (block > spec_.block_count()) {
            visit_(word_);
            return;
        }
        const auto& pool = pool_[block - 1];
        auto& rest = pool_[block];
        auto& idx = choice_[block];
        const int m = static_cast<int>(pool.size());
        const int a = spec_.sizes()[block - 1];
        const int base = spec_.block_begin(block) - 1;
        const bool desc = spec_.descends(block);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            if (desc)
                for (int t = 0; t < a; ++t) word_[base + t] = pool[idx[a - 1 - t]];
            else
                for (int t = 0; t < a; ++t) word_[base + t] = pool[idx[t]];
            int c = 0, w = 0;
            for (int t = 0; t < m; ++t) {
                if (c < a && idx[c] == t) { ++c; continue; }
                rest[w++] = pool[t];
            }
            descend(block + 1);
            int pos = a - 1;  // next index combination
            while (pos >= 0 && idx[pos] == m - a + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int t = pos + 1; t < a; ++t) idx[t] = idx[t - 1] + 1;
        }
    }

    const BlockSpec& spec_;
    const std::function<void(const std::vector<int>&)>& visit_;
    std::vector<int> word_;
    std::vector<std::vector<int>> pool_;
    std::vector<std::vector<int>> choice_;
};

struct SmallCycleScan {
    bool odd_small = false;       // some small cycle has odd length
    int small_count = 0;          // number of small cycles
    std::uint32_t small_mask = 0;      // blocks holding at least one small cycle
    std::uint32_t odd_total_mask = 0;  // blocks whose total small-cycle length is odd
};

SmallCycleScan scan_small_cycles(const std::vector<int>& word,
                                 const std::vector<int>& block_of_pos) {
    SmallCycleScan s;
    const int n = static_cast<int>(word.size());
    std::uint64_t visited = 0;
    for (int start = 1; start <= n; ++start) {
        if (visited & (std::uint64_t{1} << (start - 1))) continue;
        const int block = block_of_pos[start];
        int length = 0;
        bool same_block = true;
        for (int j = start; !(visited & (std::uint64_t{1} << (j - 1))); j = word[j - 1]) {
            visited |= std::uint64_t{1} << (j - 1);
            ++length;
            same_block = same_block && block_of_pos[j] == block;
        }
        if (same_block) {
            ++s.small_count;
            s.small_mask |= std::uint32_t{1} << (block - 1);
            if (length % 2 != 0) {
                s.odd_small = true;
                s.odd_total_mask ^= std::uint32_t{1} << (block - 1);
            }
        }
    }
    return s;
}

// Runs fn over every permutation of 1..n in lexicographic order with the
// precomputed position-to-block table.
template <class Fn>
void scan_symmetric_group(const BlockSpec& spec, Fn&& fn) {
    const int n = spec.total_size();
    std::vector<int> block_of_pos(n + 1, 0);
    for (int i = 1; i <= n; ++i) block_of_pos[i] = spec.block_of(i);
    std::vector<int> word(n);
    std::iota(word.begin(), word.end(), 1);
    do {
        fn(scan_small_cycles(word, block_of_pos));
    } while (std::next_permutation(word.begin(), word.end()));
}

std::uint32_t descending_mask(const BlockSpec& spec) {
    std::uint32_t mask = 0;
    for (int i : spec.descending()) mask |= std::uint32_t{1} << (i - 1);
    return mask;
}

BigInt weight_sum_from_counts(const std::vector<std::uint64_t>& by_count) {
    BigInt acc = 0;
    for (std::size_t m = 0; m < by_count.size(); ++m)
        if (by_count[m]) acc += BigInt(by_count[m]) << m;
    return acc;
}

}  // namespace

void for_each_as_permutation(const BlockSpec& spec,
                             const std::function<void(const std::vector<int>&)>& visit,
                             const Limits& limits) {
    check_enumeration_limit("for_each_as_permutation", spec, limits);
    DistributionEnumerator(spec, visit).run();
}

std::vector<Permutation> enumerate_as_permutations(const BlockSpec& spec, const Limits& limits) {
    check_enumeration_limit("enumerate_as_permutations", spec, limits);
    std::vector<Permutation> out;
    for_each_as_permutation(
        spec, [&](const std::vector<int>& word) { out.emplace_back(word); }, limits);
    std::sort(out.begin(), out.end());
    return out;
}

BigInt count_derangements_oracle(const BlockSpec& spec, const Limits& limits) {
    check_enumeration_limit("count_derangements_oracle", spec, limits);
    BigInt count = 0;
    for_each_as_permutation(
        spec,
        [&](const std::vector<int>& word) {
            for (std::size_t i = 0; i < word.size(); ++i)
                if (word[i] == static_cast<int>(i) + 1) return;
            ++count;
        },
        limits);
    return count;
}

std::map<FixedPointProfile, BigInt> count_by_fixed_point_profile(const BlockSpec& spec,
                                                                 const Limits& limits) {
    check_enumeration_limit("count_by_fixed_point_profile", spec, limits);
    std::map<FixedPointProfile, BigInt> histogram;
    FixedPointProfile profile(spec.block_count());
    for_each_as_permutation(
        spec,
        [&](const std::vector<int>& word) {
            std::fill(profile.begin(), profile.end(), 0);
            for (int b = 1; b <= spec.block_count(); ++b)
                for (int i = spec.block_begin(b); i <= spec.block_end(b); ++i)
                    if (word[i - 1] == i) ++profile[b - 1];
            ++histogram[profile];
        },
        limits);
    return histogram;
}

BigInt sum_small_cycle_weights(const BlockSpec& spec, const Limits& limits) {
    check_scan_limit("sum_small_cycle_weights", spec, limits);
    std::vector<std::uint64_t> by_count(spec.total_size() / 2 + 1, 0);
    scan_symmetric_group(spec, [&](const SmallCycleScan& s) {
        if (!s.odd_small) ++by_count[s.small_count];
    });
    return weight_sum_from_counts(by_count);
}

BigInt sum_acceptable_weights(const BlockSpec& spec, const Limits& limits) {
    check_scan_limit("sum_acceptable_weights", spec, limits);
    const std::uint32_t desc = descending_mask(spec);
    std::vector<std::uint64_t> by_count(spec.total_size() / 2 + 1, 0);
    scan_symmetric_group(spec, [&](const SmallCycleScan& s) {
        if (!s.odd_small && (s.small_mask & ~desc) == 0) ++by_count[s.small_count];
    });
    return weight_sum_from_counts(by_count);
}

BigInt count_even_small_totals(const BlockSpec& spec, const Limits& limits) {
    check_scan_limit("count_even_small_totals", spec, limits);
    const std::uint32_t desc = descending_mask(spec);
    std::uint64_t count = 0;
    scan_symmetric_group(spec, [&](const SmallCycleScan& s) {
        if ((s.small_mask & ~desc) == 0 && (s.odd_total_mask & desc) == 0) ++count;
    });
    return BigInt(count);
}

}  // namespace derange
