#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>
#include <vector>

#include "derange/block_spec.hpp"
#include "derange/counters.hpp"
#include "derange/enumerate.hpp"
#include "derange/fixtures.hpp"
#include "derange/oracle.hpp"
#include "derange/ornament.hpp"

using derange::AugmentedOrnament;
using derange::BigInt;
using derange::BlockSpec;
using derange::CycleWord;
using derange::Ornament;
using derange::Partition;
using derange::Permutation;

namespace {

CycleWord word(std::vector<int> colors) { return CycleWord(std::move(colors)); }

Ornament ornament(std::vector<std::vector<int>> words) {
    std::vector<CycleWord> built;
    for (auto& w : words) built.emplace_back(std::move(w));
    return Ornament(std::move(built));
}

std::vector<int> naive_least_rotation(const std::vector<int>& w) {
    std::vector<int> best = w;
    std::vector<int> candidate = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::rotate(candidate.begin(), candidate.begin() + 1, candidate.end());
        if (candidate < best) best = candidate;
    }
    return best;
}

template <class Fn>
void for_each_word(int max_color, int length, Fn&& fn) {
    std::vector<int> w(length, 1);
    while (true) {
        fn(w);
        int pos = length - 1;
        while (pos >= 0 && w[pos] == max_color) w[pos--] = 1;
        if (pos < 0) return;
        ++w[pos];
    }
}

const Ornament kCrossing = to_ornament(derange::fixtures::spec_8_10(),
                                       derange::fixtures::permutation_8_10());

}  // namespace

TEST_CASE("cycle words canonicalize to the least rotation") {
    CHECK(word({2, 1}).colors() == std::vector<int>{1, 2});
    CHECK(word({1, 2, 2, 1, 2}).colors() == std::vector<int>{1, 2, 1, 2, 2});
    CHECK(word({3, 1, 2}).colors() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(word({}), std::invalid_argument);
    CHECK_THROWS_AS(word({0, 1}), std::invalid_argument);

    for (int length = 1; length <= 7; ++length)
        for_each_word(3, length, [&](const std::vector<int>& w) {
            CHECK(word(w).colors() == naive_least_rotation(w));
        });
}

TEST_CASE("fundamental periods") {
    auto decomposition = fundamental_period(word({1, 2, 1, 2}));
    CHECK(decomposition.period == word({1, 2}));
    CHECK(decomposition.repetitions == 2);

    decomposition = fundamental_period(word({1, 2, 1, 2, 1, 2}));
    CHECK(decomposition.period == word({1, 2}));
    CHECK(decomposition.repetitions == 3);

    CHECK(fundamental_period(word({1})).repetitions == 1);
    CHECK(fundamental_period(word({1, 1})).repetitions == 2);

    decomposition = fundamental_period(word({1, 2, 2, 1, 2}));
    CHECK(decomposition.period == word({1, 2, 2, 1, 2}));
    CHECK(decomposition.repetitions == 1);
}

TEST_CASE("permutations map to colored cycle multisets") {
    CHECK(kCrossing ==
          ornament({{1, 2, 2, 1, 2}, {1, 2, 2}, {1, 2, 1, 2}, {1, 2, 1, 2}, {1, 2}}));
    CHECK(to_ornament(BlockSpec({2, 2}, {}), Permutation({2, 1, 4, 3})) ==
          ornament({{1, 1}, {2, 2}}));
    CHECK(to_ornament(BlockSpec({1}, {}), Permutation({1})) == ornament({{1}}));
    CHECK_THROWS_AS(to_ornament(BlockSpec({2, 2}, {}), Permutation({1, 2})),
                    std::invalid_argument);
}

TEST_CASE("symmetry orders") {
    CHECK(symmetry_order(kCrossing) == 8);
    CHECK(symmetry_order(ornament({{1, 2}})) == 1);
    CHECK(symmetry_order(ornament({{1, 1}, {1, 1}})) == 8);
    CHECK(symmetry_order(ornament({{1, 1, 1}})) == 3);
    CHECK(symmetry_order(Ornament{}) == 1);
}

TEST_CASE("augmentation collapses repeated periods") {
    const auto augmented = augment(kCrossing);
    REQUIRE(augmented.entries().size() == 3);
    CHECK(augmented.entries()[0].first == word({1, 2}));
    CHECK(augmented.entries()[0].second == Partition{2, 2, 1});
    CHECK(augmented.entries()[1].first == word({1, 2, 2}));
    CHECK(augmented.entries()[1].second == Partition{1});
    CHECK(augmented.entries()[2].first == word({1, 2, 2, 1, 2}));
    CHECK(augmented.entries()[2].second == Partition{1});

    const auto mono = augment(ornament({{1, 1}}));
    REQUIRE(mono.entries().size() == 1);
    CHECK(mono.entries()[0].first == word({1}));
    CHECK(mono.entries()[0].second == Partition{2});

    const auto triple = augment(ornament({{1, 2}, {1, 2}, {1, 2}}));
    REQUIRE(triple.entries().size() == 1);
    CHECK(triple.entries()[0].second == Partition{1, 1, 1});
}

TEST_CASE("unaugment inverts augment") {
    CHECK(unaugment(augment(kCrossing)) == kCrossing);

    std::mt19937 rng(987654);
    std::uniform_int_distribution<int> length_dist(1, 5);
    std::uniform_int_distribution<int> color_dist(1, 3);
    std::uniform_int_distribution<int> copies_dist(1, 3);
    for (int round = 0; round < 200; ++round) {
        std::vector<CycleWord> words;
        const int distinct = 1 + round % 4;
        for (int c = 0; c < distinct; ++c) {
            std::vector<int> colors(length_dist(rng));
            for (auto& color : colors) color = color_dist(rng);
            const int copies = copies_dist(rng);
            for (int t = 0; t < copies; ++t) words.push_back(CycleWord(colors));
        }
        const Ornament o(std::move(words));
        CHECK(unaugment(augment(o)) == o);
    }
}

TEST_CASE("centralizer orders") {
    CHECK(derange::centralizer_order({2, 2, 1}) == 8);
    CHECK(derange::centralizer_order({1}) == 1);
    CHECK(derange::centralizer_order({6}) == 6);
    CHECK(derange::centralizer_order({}) == 1);
}

TEST_CASE("satisfactory ornaments") {
    const BlockSpec both({2, 2}, {1, 2});
    const BlockSpec first({2, 2}, {1});
    const BlockSpec neither({2, 2}, {});

    const auto mono_pair = ornament({{1, 1}, {2, 2}});
    CHECK(is_satisfactory(both, mono_pair));
    CHECK_FALSE(is_satisfactory(first, mono_pair));    // (2 2) sits in an ascending block
    CHECK_FALSE(is_satisfactory(neither, mono_pair));

    CHECK_FALSE(is_satisfactory(both, ornament({{1}, {1}, {2}, {2}})));  // 1-cycles
    CHECK_FALSE(is_satisfactory(both, ornament({{1, 2, 1, 2}})));        // periodic
    CHECK(is_satisfactory(neither, ornament({{1, 1, 2, 2}})));
    CHECK(is_satisfactory(neither, ornament({{1, 2}, {1, 2}})));
    CHECK_FALSE(is_satisfactory(both, ornament({{1, 2}})));  // wrong color counts
}

TEST_CASE("acceptable ornaments") {
    CHECK(is_acceptable(derange::fixtures::spec_8_10(), kCrossing));
    CHECK_FALSE(is_acceptable(BlockSpec({2, 2}, {2}), ornament({{1, 1}, {2, 2}})));
    CHECK(is_acceptable(BlockSpec({2, 2}, {1, 2}), ornament({{1, 1}, {2, 2}})));
    CHECK_FALSE(is_acceptable(BlockSpec({3, 1}, {1}), ornament({{1, 1, 1}, {2}})));  // odd mono
    // agreement with the permutation-side weight on small instances
    for (int n = 1; n <= 5; ++n)
        derange::for_each_composition(n, [&](const std::vector<int>& a) {
            derange::for_each_subset(static_cast<int>(a.size()), [&](const std::vector<int>& s) {
                const BlockSpec spec(a, s);
                derange::for_each_as_permutation(spec, [&](const std::vector<int>& w) {
                    const Permutation p(w);
                    CHECK(is_acceptable(spec, to_ornament(spec, p)) ==
                          (acceptable_weight(spec, p) != 0));
                });
            });
        });
}

TEST_CASE("satisfactory counts match brute-force derangement counts") {
    CHECK(derange::count_satisfactory(BlockSpec({2, 2}, {1, 2})) == 3);
    CHECK(derange::count_satisfactory(BlockSpec({2, 2}, {1})) == 2);
    CHECK(derange::count_satisfactory(BlockSpec({2, 2}, {})) == 2);
    CHECK(derange::count_satisfactory(BlockSpec({1}, {1})) == 0);
    CHECK(derange::count_satisfactory(BlockSpec({1, 1}, {})) == 1);
    CHECK_THROWS_AS(derange::count_satisfactory(BlockSpec({6, 6}, {})), derange::LimitError);

    for (int n = 1; n <= 6; ++n)
        derange::for_each_composition(n, [&](const std::vector<int>& a) {
            derange::for_each_subset(static_cast<int>(a.size()), [&](const std::vector<int>& s) {
                const BlockSpec spec(a, s);
                CHECK(derange::count_satisfactory(spec) ==
                      derange::count_derangements_oracle(spec));
            });
        });
}

TEST_CASE("the multiset image determines the small-cycle statistics") {
    for (int n = 1; n <= 7; ++n)
        derange::for_each_composition(n, [&](const std::vector<int>& a) {
            const BlockSpec spec(a, std::vector<int>{});
            // per-block sorted small-cycle lengths; equal images must give
            // equal signatures, which pins every acceptable weight at once
            std::map<Ornament, std::vector<std::vector<int>>> signature_of;
            std::vector<int> domain(n);
            std::iota(domain.begin(), domain.end(), 1);
            std::vector<int> images = domain;
            do {
                const Permutation p(images);
                std::vector<std::vector<int>> signature(a.size());
                for (const auto& sc : small_cycles(spec, p))
                    signature[sc.block - 1].push_back(static_cast<int>(sc.cycle.size()));
                for (auto& lengths : signature) std::sort(lengths.begin(), lengths.end());
                const auto image = to_ornament(spec, p);
                const auto [it, inserted] = signature_of.emplace(image, signature);
                if (!inserted) CHECK(it->second == signature);
            } while (std::next_permutation(images.begin(), images.end()));
        });
}

TEST_CASE("fiber sizes balance the symmetry orders") {
    for (int n = 1; n <= 5; ++n)
        derange::for_each_composition(n, [&](const std::vector<int>& a) {
            const BlockSpec spec(a, std::vector<int>{});
            BigInt block_factorials = 1;
            for (int part : a) block_factorials *= derange::factorial(part);
            std::map<Ornament, long long> fiber;
            std::vector<int> images(n);
            std::iota(images.begin(), images.end(), 1);
            do {
                ++fiber[to_ornament(spec, Permutation(images))];
            } while (std::next_permutation(images.begin(), images.end()));
            for (const auto& [image, size] : fiber)
                CHECK(BigInt(size) * symmetry_order(image) == block_factorials);
        });
}

TEST_CASE("serialization is stable") {
    std::ostringstream os;
    os << kCrossing;
    CHECK(os.str() == "(1 2) (1 2 2) (1 2 1 2)x2 (1 2 1 2 2)");
    std::ostringstream aug;
    aug << augment(kCrossing);
    CHECK(aug.str() == "(1 2) [2 2 1] (1 2 2) [1] (1 2 1 2 2) [1]");
}
