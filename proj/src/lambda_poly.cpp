#include "derange/lambda_poly.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "derange/block_spec.hpp"
#include "derange/counters.hpp"
#include "derange/oracle.hpp"

namespace derange {

LambdaPoly::LambdaPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LambdaPoly LambdaPoly::constant(BigInt c) {
    LambdaPoly p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

void LambdaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt LambdaPoly::coeff(int j) const {
    if (j < 0 || j > degree()) return 0;
    return coeffs_[j];
}

BigInt LambdaPoly::eval(const BigInt& x) const {
    BigInt value = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
    return value;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator*=(const BigInt& c) {
    for (auto& coefficient : coeffs_) coefficient *= c;
    trim();
    return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return LambdaPoly(std::move(out));
}

bool is_constant(const LambdaPoly& p) { return p.degree() <= 0; }

BigInt constant_term(const LambdaPoly& p) { return p.coeff(0); }

LambdaPoly exact_div(const LambdaPoly& p, const BigInt& den) {
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(exact_div(c, den));
    return LambdaPoly(std::move(out));
}

LambdaPoly rencontres_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("rencontres_polynomial: negative n");
    std::vector<BigInt> coeffs(n + 1);
    for (int j = 0; j <= n; ++j) coeffs[j] = binomial(n, j) * derangement_number(n - j);
    return LambdaPoly(std::move(coeffs));
}

namespace {

std::vector<int> validated_sizes(const std::vector<int>& sizes) {
    if (sizes.empty()) throw std::invalid_argument("sizes: needs at least one block");
    for (int a : sizes)
        if (a < 1) throw std::invalid_argument("sizes: block sizes must be positive");
    return sizes;
}

BigInt factorial_product(const std::vector<int>& sizes) {
    BigInt d = 1;
    for (int a : sizes) d *= factorial(a);
    return d;
}

// Lattice of intersection-size tuples; grows as prod(a_i + 1).
constexpr std::size_t kSieveLatticeCap = std::size_t{1} << 22;
constexpr int kSubsetCap = 12;

}  // namespace

LambdaPoly sieve_polynomial(const std::vector<int>& sizes) {
    validated_sizes(sizes);
    const int k = static_cast<int>(sizes.size());
    const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    std::size_t lattice = 1;
    for (int a : sizes) {
        lattice *= static_cast<std::size_t>(a) + 1;
        if (lattice > kSieveLatticeCap)
            throw LimitError("sieve_polynomial: intersection lattice larger than 2^22 tuples");
    }
    std::vector<LambdaPoly> ren(n + 1);
    for (int m = 0; m <= n; ++m) ren[m] = rencontres_polynomial(m);

    LambdaPoly acc;
    // partial carries prod_{j < block} C(a_j, t_j) f(t_j); the sign of the
    // term is (-1)^{sum t_j}.
    std::function<void(int, int, const LambdaPoly&, int)> expand =
        [&](int block, int used, const LambdaPoly& partial, int parity) {
            if (block == k) {
                const LambdaPoly term = partial * ren[n - used];
                if (parity) acc -= term; else acc += term;
                return;
            }
            for (int t = 0; t <= sizes[block]; ++t) {
                LambdaPoly next = partial * ren[t];
                next *= binomial(sizes[block], t);
                expand(block + 1, used + t, next, parity ^ (t & 1));
            }
        };
    expand(0, 0, LambdaPoly::constant(1), 0);
    return exact_div(acc, factorial_product(sizes));
}

LambdaPoly sieve_polynomial_subsets(const std::vector<int>& sizes) {
    validated_sizes(sizes);
    const int k = static_cast<int>(sizes.size());
    const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (n > kSubsetCap) throw LimitError("sieve_polynomial_subsets", n, kSubsetCap);
    std::vector<int> block_of_pos(n);
    for (int b = 0, pos = 0; b < k; ++b)
        for (int t = 0; t < sizes[b]; ++t) block_of_pos[pos++] = b;
    std::vector<LambdaPoly> ren(n + 1);
    for (int m = 0; m <= n; ++m) ren[m] = rencontres_polynomial(m);

    LambdaPoly acc;
    std::vector<int> intersect(k);
    for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
        std::fill(intersect.begin(), intersect.end(), 0);
        int taken = 0;
        for (int pos = 0; pos < n; ++pos)
            if (subset & (std::uint32_t{1} << pos)) {
                ++intersect[block_of_pos[pos]];
                ++taken;
            }
        LambdaPoly term = ren[n - taken];
        for (int b = 0; b < k; ++b) term = term * ren[intersect[b]];
        if (taken % 2 != 0) acc -= term; else acc += term;
    }
    return exact_div(acc, factorial_product(sizes));
}

BigInt normalized_weight_sum(const std::vector<int>& sizes, const Limits& limits) {
    validated_sizes(sizes);
    std::vector<int> all_blocks(sizes.size());
    std::iota(all_blocks.begin(), all_blocks.end(), 1);
    const BlockSpec spec(sizes, all_blocks);  // the weight ignores S
    return exact_div(sum_small_cycle_weights(spec, limits), factorial_product(sizes));
}

}  // namespace derange
