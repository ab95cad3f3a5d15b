#pragma once

#include <compare>
#include <iosfwd>
#include <utility>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/block_spec.hpp"
#include "derange/limits.hpp"
#include "derange/permutation.hpp"

namespace derange {

// A directed cycle of block colors, stored as its lexicographically least
// rotation. Ordered by (length, word) so ornament listings are stable.
class CycleWord {
public:
    explicit CycleWord(std::vector<int> colors);  // nonempty, colors >= 1; canonicalizes

    const std::vector<int>& colors() const { return colors_; }
    int length() const { return static_cast<int>(colors_.size()); }
    bool monochromatic() const;

    bool operator==(const CycleWord&) const = default;
    std::strong_ordering operator<=>(const CycleWord& o) const {
        if (auto c = colors_.size() <=> o.colors_.size(); c != 0) return c;
        return colors_ <=> o.colors_;
    }

private:
    std::vector<int> colors_;
};

std::ostream& operator<<(std::ostream& os, const CycleWord& w);

struct PeriodDecomposition {
    CycleWord period;
    int repetitions;  // the word equals the period repeated this many times
};

// Shortest prefix whose repetition gives the word back; repetitions = 1
// means the word is aperiodic.
PeriodDecomposition fundamental_period(const CycleWord& w);

// Multiset of cycle words, stored as strictly sorted (word, multiplicity)
// classes.
class Ornament {
public:
    Ornament() = default;
    explicit Ornament(std::vector<CycleWord> words);

    const std::vector<std::pair<CycleWord, int>>& classes() const { return classes_; }
    int total_length() const;
    std::vector<int> color_counts(int color_count) const;  // throws on out-of-range colors

    bool operator==(const Ornament&) const = default;
    auto operator<=>(const Ornament&) const = default;

private:
    std::vector<std::pair<CycleWord, int>> classes_;
};

std::ostream& operator<<(std::ostream& os, const Ornament& o);

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

// An ornament whose distinct aperiodic periods each carry a partition
// recording the repetition counts of the cycles that collapsed onto them.
class AugmentedOrnament {
public:
    AugmentedOrnament() = default;
    explicit AugmentedOrnament(std::vector<std::pair<CycleWord, Partition>> entries);

    const std::vector<std::pair<CycleWord, Partition>>& entries() const { return entries_; }

    bool operator==(const AugmentedOrnament&) const = default;

private:
    std::vector<std::pair<CycleWord, Partition>> entries_;
};

std::ostream& operator<<(std::ostream& os, const AugmentedOrnament& a);

// Replace each cycle of p by the word of blocks its elements pass through.
Ornament to_ornament(const BlockSpec& spec, const Permutation& p);

// Order of the symmetry group of the multiset: a class of l copies of an
// r-repeating word contributes r^l * l! (each copy may rotate by a multiple
// of its period, and equal copies may be permuted).
BigInt symmetry_order(const Ornament& o);

// Replace every r-repeating cycle by r copies of its fundamental period and
// record r as a part of the partition attached to that period.
AugmentedOrnament augment(const Ornament& o);

// Inverse of augment.
Ornament unaugment(const AugmentedOrnament& a);

// prod over part sizes j of j^{n_j} n_j!, with n_j the number of parts of
// size j: the centralizer order of the cycle type.
BigInt centralizer_order(const Partition& partition);

// Color counts equal to the block sizes, no 1-cycles, and every cycle
// aperiodic except monochromatic 2-cycles colored by a descending block.
bool is_satisfactory(const BlockSpec& spec, const Ornament& o);

// Color counts equal to the block sizes and monochromatic cycles only in
// descending blocks, only with even length.
bool is_acceptable(const BlockSpec& spec, const Ornament& o);

// Number of satisfactory ornaments, counted over canonical aperiodic words
// enumerated per color-count vector.
BigInt count_satisfactory(const BlockSpec& spec, const Limits& limits = {});

}  // namespace derange
