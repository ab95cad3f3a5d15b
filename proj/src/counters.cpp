#include "derange/counters.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace derange {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

BigInt multinomial(const std::vector<int>& parts) {
    BigInt r = 1;
    int total = 0;
    for (int part : parts) {
        if (part < 0) return 0;
        total += part;
        r *= binomial(total, part);
    }
    return r;
}

BigInt derangement_number(int n) {
    if (n <= 0) return 1;
    BigInt prev2 = 1, prev1 = 0;  // D_0, D_1
    for (int i = 2; i <= n; ++i) {
        BigInt cur = (i - 1) * (prev1 + prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

BigInt count_sum(const BlockSpec& spec) {
    const int k = spec.block_count();
    const auto& a = spec.sizes();
    std::vector<int> cap(k), b(k, 0), parts(k);
    for (int i = 0; i < k; ++i) cap[i] = spec.descends(i + 1) ? a[i] : 1;
    BigInt acc = 0;
    while (true) {
        int parity = 0;
        for (int i = 0; i < k; ++i) {
            parts[i] = a[i] - b[i];
            parity ^= b[i] & 1;
        }
        const BigInt term = multinomial(parts);
        if (parity) acc -= term; else acc += term;
        int pos = k - 1;
        while (pos >= 0 && b[pos] == cap[pos]) b[pos--] = 0;
        if (pos < 0) break;
        ++b[pos];
    }
    return acc;
}

namespace {

// f(level, c) = number of (c,S)-permutations with no fixed points in blocks
// 1..level. Inverting the one-step recurrence in the fixed-point count of
// block `level` gives, for c_level >= 1:
//   descending:  f(level, c) = f(level-1, c) - f(level, c - e_level)
//   ascending:   f(level, c) = f(level-1, c) - f(level-1, c - e_level)
// and f(level, c) = f(level-1, c) when c_level = 0, with f(0, c) the plain
// (c,S)-permutation count multinomial(c).
class BlockRecursion {
public:
    explicit BlockRecursion(const BlockSpec& spec) : spec_(spec) {}

    BigInt eval(int level, const std::vector<int>& c) {
        if (level == 0) return multinomial(c);
        const auto key = std::make_pair(level, c);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        BigInt value;
        if (c[level - 1] == 0) {
            value = eval(level - 1, c);
        } else {
            std::vector<int> shrunk = c;
            --shrunk[level - 1];
            value = spec_.descends(level) ? eval(level - 1, c) - eval(level, shrunk)
                                          : eval(level - 1, c) - eval(level - 1, shrunk);
        }
        return memo_.emplace(std::move(key), std::move(value)).first->second;
    }

private:
    const BlockSpec& spec_;
    std::map<std::pair<int, std::vector<int>>, BigInt> memo_;
};

}  // namespace

BigInt count_recursion_partial(const BlockSpec& spec, int j) {
    if (j < 0 || j > spec.block_count())
        throw std::invalid_argument("count_recursion_partial: block prefix out of range");
    BlockRecursion recursion(spec);
    return recursion.eval(j, spec.sizes());
}

BigInt count_recursion(const BlockSpec& spec) {
    return count_recursion_partial(spec, spec.block_count());
}

}  // namespace derange
