#include "derange/ornament.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "derange/counters.hpp"

namespace derange {

namespace {

// Booth's least-rotation algorithm: index of the lexicographically least
// rotation of w (any index achieving it, reduced mod length).
int least_rotation_index(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> failure(2 * n, -1);
    int best = 0;
    for (int j = 1; j < 2 * n; ++j) {
        const int c = w[j % n];
        int i = failure[j - best - 1];
        while (i != -1 && c != w[(best + i + 1) % n]) {
            if (c < w[(best + i + 1) % n]) best = j - i - 1;
            i = failure[i];
        }
        if (c != w[(best + i + 1) % n]) {
            if (c < w[best % n]) best = j;
            failure[j - best] = -1;
        } else {
            failure[j - best] = i + 1;
        }
    }
    return best % n;
}

void rotate_to_least(std::vector<int>& w) {
    const int start = least_rotation_index(w);
    std::rotate(w.begin(), w.begin() + start, w.end());
}

bool is_least_rotation(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    const int start = least_rotation_index(w);
    for (int i = 0; i < n; ++i)
        if (w[(start + i) % n] != w[i]) return false;
    return true;
}

bool is_aperiodic(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (int i = d; i < n && repeats; ++i) repeats = w[i] == w[i - d];
        if (repeats) return false;
    }
    return true;
}

bool matches_color_counts(const BlockSpec& spec, const Ornament& o) {
    const int k = spec.block_count();
    std::vector<int> counts(k, 0);
    for (const auto& [word, mult] : o.classes())
        for (int c : word.colors()) {
            if (c < 1 || c > k) return false;
            counts[c - 1] += mult;
        }
    return counts == spec.sizes();
}

}  // namespace

CycleWord::CycleWord(std::vector<int> colors) : colors_(std::move(colors)) {
    if (colors_.empty()) throw std::invalid_argument("CycleWord: empty word");
    for (int c : colors_)
        if (c < 1) throw std::invalid_argument("CycleWord: colors must be >= 1");
    rotate_to_least(colors_);
}

bool CycleWord::monochromatic() const {
    return std::all_of(colors_.begin(), colors_.end(),
                       [&](int c) { return c == colors_.front(); });
}

std::ostream& operator<<(std::ostream& os, const CycleWord& w) {
    os << '(';
    for (int i = 0; i < w.length(); ++i) {
        if (i > 0) os << ' ';
        os << w.colors()[i];
    }
    return os << ')';
}

PeriodDecomposition fundamental_period(const CycleWord& w) {
    const auto& c = w.colors();
    const int n = w.length();
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (int i = d; i < n && repeats; ++i) repeats = c[i] == c[i - d];
        if (repeats) return {CycleWord(std::vector<int>(c.begin(), c.begin() + d)), n / d};
    }
    return {w, 1};
}

Ornament::Ornament(std::vector<CycleWord> words) {
    std::sort(words.begin(), words.end());
    for (auto& w : words) {
        if (!classes_.empty() && classes_.back().first == w)
            ++classes_.back().second;
        else
            classes_.emplace_back(std::move(w), 1);
    }
}

int Ornament::total_length() const {
    int total = 0;
    for (const auto& [word, mult] : classes_) total += word.length() * mult;
    return total;
}

std::vector<int> Ornament::color_counts(int color_count) const {
    std::vector<int> counts(color_count, 0);
    for (const auto& [word, mult] : classes_)
        for (int c : word.colors()) {
            if (c < 1 || c > color_count)
                throw std::out_of_range("Ornament::color_counts: color out of range");
            counts[c - 1] += mult;
        }
    return counts;
}

std::ostream& operator<<(std::ostream& os, const Ornament& o) {
    bool first = true;
    for (const auto& [word, mult] : o.classes()) {
        if (!first) os << ' ';
        first = false;
        os << word;
        if (mult > 1) os << 'x' << mult;
    }
    return os;
}

AugmentedOrnament::AugmentedOrnament(std::vector<std::pair<CycleWord, Partition>> entries)
    : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [word, partition] : entries_) {
        if (partition.empty())
            throw std::invalid_argument("AugmentedOrnament: empty partition");
        std::sort(partition.begin(), partition.end(), std::greater<int>());
        if (partition.back() < 1)
            throw std::invalid_argument("AugmentedOrnament: parts must be positive");
    }
}

std::ostream& operator<<(std::ostream& os, const AugmentedOrnament& a) {
    bool first = true;
    for (const auto& [word, partition] : a.entries()) {
        if (!first) os << ' ';
        first = false;
        os << word << " [";
        for (std::size_t i = 0; i < partition.size(); ++i) {
            if (i > 0) os << ' ';
            os << partition[i];
        }
        os << ']';
    }
    return os;
}

Ornament to_ornament(const BlockSpec& spec, const Permutation& p) {
    if (p.size() != spec.total_size())
        throw std::invalid_argument("to_ornament: length mismatch");
    std::vector<CycleWord> words;
    for (const auto& cycle : cycles(p)) {
        std::vector<int> colors(cycle.size());
        std::transform(cycle.begin(), cycle.end(), colors.begin(),
                       [&](int i) { return spec.block_of(i); });
        words.emplace_back(std::move(colors));
    }
    return Ornament(std::move(words));
}

BigInt symmetry_order(const Ornament& o) {
    BigInt order = 1;
    for (const auto& [word, mult] : o.classes()) {
        const int r = fundamental_period(word).repetitions;
        for (int copy = 0; copy < mult; ++copy) order *= r;
        order *= factorial(mult);
    }
    return order;
}

AugmentedOrnament augment(const Ornament& o) {
    std::map<CycleWord, Partition> parts;
    for (const auto& [word, mult] : o.classes()) {
        const auto [period, repetitions] = fundamental_period(word);
        auto& partition = parts[period];
        partition.insert(partition.end(), mult, repetitions);
    }
    std::vector<std::pair<CycleWord, Partition>> entries(parts.begin(), parts.end());
    return AugmentedOrnament(std::move(entries));
}

Ornament unaugment(const AugmentedOrnament& a) {
    std::vector<CycleWord> words;
    for (const auto& [period, partition] : a.entries())
        for (int r : partition) {
            std::vector<int> colors;
            colors.reserve(period.length() * r);
            for (int copy = 0; copy < r; ++copy)
                colors.insert(colors.end(), period.colors().begin(), period.colors().end());
            words.emplace_back(std::move(colors));
        }
    return Ornament(std::move(words));
}

BigInt centralizer_order(const Partition& partition) {
    std::map<int, int> multiplicity;
    for (int part : partition) {
        if (part < 1) throw std::invalid_argument("centralizer_order: parts must be positive");
        ++multiplicity[part];
    }
    BigInt order = 1;
    for (const auto& [size, count] : multiplicity) {
        for (int i = 0; i < count; ++i) order *= size;
        order *= factorial(count);
    }
    return order;
}

bool is_satisfactory(const BlockSpec& spec, const Ornament& o) {
    if (!matches_color_counts(spec, o)) return false;
    for (const auto& [word, mult] : o.classes()) {
        (void)mult;
        if (word.length() == 1) return false;
        if (fundamental_period(word).repetitions == 1) continue;
        const bool exempt =
            word.length() == 2 && word.monochromatic() && spec.descends(word.colors().front());
        if (!exempt) return false;
    }
    return true;
}

bool is_acceptable(const BlockSpec& spec, const Ornament& o) {
    if (!matches_color_counts(spec, o)) return false;
    for (const auto& [word, mult] : o.classes()) {
        (void)mult;
        if (!word.monochromatic()) continue;
        if (!spec.descends(word.colors().front()) || word.length() % 2 != 0) return false;
    }
    return true;
}

BigInt count_satisfactory(const BlockSpec& spec, const Limits& limits) {
    const int n = spec.total_size();
    if (n > limits.enumeration_n)
        throw LimitError("count_satisfactory", n, limits.enumeration_n);
    const int k = spec.block_count();
    const auto& a = spec.sizes();

    std::vector<std::size_t> strides(k);
    std::size_t box = 1;
    for (int i = k - 1; i >= 0; --i) {
        strides[i] = box;
        box *= static_cast<std::size_t>(a[i]) + 1;
    }
    const auto advance = [&](std::vector<int>& v) {
        for (int i = k - 1; i >= 0; --i) {
            if (++v[i] <= a[i]) return;
            v[i] = 0;
        }
    };

    // classes[idx(v)] = number of admissible cycle classes using exactly v_i
    // letters of color i: canonical aperiodic words of length >= 2, plus the
    // exempt monochromatic 2-cycle when its block descends.
    std::vector<long long> classes(box, 0);
    std::vector<int> v(k, 0);
    for (std::size_t idx = 0; idx < box; ++idx, advance(v)) {
        int total = 0, nonzero = 0, solo = -1;
        for (int i = 0; i < k; ++i) {
            total += v[i];
            if (v[i] > 0) { ++nonzero; solo = i; }
        }
        if (total < 2) continue;
        if (nonzero == 1) {
            // monochromatic words of length >= 2 are periodic
            if (total == 2 && spec.descends(solo + 1)) classes[idx] = 1;
            continue;
        }
        std::vector<int> word;
        word.reserve(total);
        for (int i = 0; i < k; ++i) word.insert(word.end(), v[i], i + 1);
        long long found = 0;
        do {
            if (is_least_rotation(word) && is_aperiodic(word)) ++found;
        } while (std::next_permutation(word.begin(), word.end()));
        classes[idx] = found;
    }

    // ways[idx(e)] = multisets of classes whose color counts sum to e; each
    // vector group contributes a factor (1 - x^v)^{-classes[v]}.
    std::vector<BigInt> ways(box);
    ways[0] = 1;
    std::fill(v.begin(), v.end(), 0);
    for (std::size_t vidx = 0; vidx < box; ++vidx, advance(v)) {
        if (classes[vidx] == 0) continue;
        const long long m = classes[vidx];
        std::vector<BigInt> next(box);
        std::vector<int> e(k, 0);
        for (std::size_t eidx = 0; eidx < box; ++eidx, advance(e)) {
            BigInt total = ways[eidx];
            int jmax = n;
            for (int i = 0; i < k; ++i)
                if (v[i] > 0) jmax = std::min(jmax, e[i] / v[i]);
            for (int j = 1; j <= jmax; ++j)
                total += binomial(static_cast<int>(m) + j - 1, j) * ways[eidx - j * vidx];
            next[eidx] = std::move(total);
        }
        ways.swap(next);
    }
    return ways[box - 1];
}

}  // namespace derange
