#include <doctest.h>

#include <random>
#include <vector>

#include "derange/counters.hpp"
#include "derange/enumerate.hpp"
#include "derange/series.hpp"

using derange::BigInt;
using derange::BlockSpec;
using derange::TruncatedSeries;
using derange::geometric_all;

namespace {

TruncatedSeries one(std::vector<int> bounds) {
    TruncatedSeries s(std::move(bounds));
    s.set_coeff(std::vector<int>(s.bounds().size(), 0), 1);
    return s;
}

template <class Fn>
void for_each_exponent(const TruncatedSeries& s, Fn&& fn) {
    std::vector<int> e(s.bounds().size(), 0);
    for (std::size_t idx = 0; idx < s.cell_count(); ++idx) {
        fn(e);
        for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i) {
            if (++e[i] <= s.bounds()[i]) break;
            e[i] = 0;
        }
    }
}

TruncatedSeries random_series(std::vector<int> bounds, std::mt19937& rng) {
    TruncatedSeries s(std::move(bounds));
    std::uniform_int_distribution<int> dist(-9, 9);
    for_each_exponent(s, [&](const std::vector<int>& e) { s.set_coeff(e, dist(rng)); });
    return s;
}

}  // namespace

TEST_CASE("geometric series coefficients are multinomials") {
    const auto line = geometric_all({3});
    CHECK(line.coeff({0}) == 1);
    CHECK(line.coeff({1}) == 1);
    CHECK(line.coeff({2}) == 1);
    CHECK(line.coeff({3}) == 1);

    CHECK(geometric_all({1, 1}).coeff({1, 1}) == 2);
    CHECK(geometric_all({2, 2}).coeff({2, 2}) == 6);

    for (const auto& bounds :
         std::vector<std::vector<int>>{{10}, {5, 5}, {3, 3, 4}, {2, 2, 2, 2}}) {
        const auto s = geometric_all(bounds);
        for_each_exponent(
            s, [&](const std::vector<int>& e) { CHECK(s.coeff(e) == derange::multinomial(e)); });
    }
}

TEST_CASE("single-variable factor examples") {
    const auto after_mul = mul_one_minus(one({2}), 1);
    CHECK(after_mul.coeff({0}) == 1);
    CHECK(after_mul.coeff({1}) == -1);
    CHECK(after_mul.coeff({2}) == 0);

    const auto after_div = div_one_plus(one({3}), 1);
    CHECK(after_div.coeff({0}) == 1);
    CHECK(after_div.coeff({1}) == -1);
    CHECK(after_div.coeff({2}) == 1);
    CHECK(after_div.coeff({3}) == -1);

    CHECK_THROWS_AS(div_one_plus(one({3}), 2), std::out_of_range);
}

TEST_CASE("divisions invert the matching multiplications under truncation") {
    const auto g = geometric_all({2, 2});
    CHECK(mul_one_plus(div_one_plus(g, 1), 1) == g);
    CHECK(mul_one_plus(div_one_plus(g, 2), 2) == g);

    std::mt19937 rng(20240811);
    for (int round = 0; round < 50; ++round) {
        const auto s = random_series({2, 3, 2}, rng);
        for (int var = 1; var <= 3; ++var) {
            CHECK(mul_one_plus(div_one_plus(s, var), var) == s);
            CHECK(div_one_plus(mul_one_plus(s, var), var) == s);
            CHECK(mul_one_minus(div_one_minus(s, var), var) == s);
            CHECK(div_one_minus(mul_one_minus(s, var), var) == s);
        }
    }
}

TEST_CASE("count_genfunc on worked instances") {
    CHECK(derange::count_genfunc(BlockSpec({2, 2}, {1, 2})) == 3);
    CHECK(derange::count_genfunc(BlockSpec({2, 2}, {})) == 2);
    derange::for_each_subset(4, [](const std::vector<int>& s) {
        CHECK(derange::count_genfunc(BlockSpec({1, 1, 1, 1}, s)) == 9);
    });
}

TEST_CASE("series count matches the closed sum up to n = 10") {
    for (int n = 1; n <= 10; ++n)
        derange::for_each_composition(n, [&](const std::vector<int>& a) {
            if (a.size() > 4) return;
            derange::for_each_subset(static_cast<int>(a.size()), [&](const std::vector<int>& s) {
                const BlockSpec spec(a, s);
                CHECK(derange::count_genfunc(spec) == derange::count_sum(spec));
            });
        });
}
