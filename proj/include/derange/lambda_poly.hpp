#pragma once

#include <vector>

#include "derange/bigint.hpp"
#include "derange/limits.hpp"

namespace derange {

// Integer-coefficient polynomial in one variable. Trailing zero coefficients
// are trimmed so the representation is canonical; the zero polynomial has
// degree -1.
class LambdaPoly {
public:
    LambdaPoly() = default;
    explicit LambdaPoly(std::vector<BigInt> coeffs);  // coeffs[j] is the lambda^j coefficient
    static LambdaPoly constant(BigInt c);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(int j) const;  // 0 beyond the degree
    BigInt eval(const BigInt& x) const;

    bool operator==(const LambdaPoly&) const = default;

    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    LambdaPoly& operator*=(const BigInt& c);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(LambdaPoly a, const BigInt& c) { return a *= c; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

bool is_constant(const LambdaPoly& p);  // degree <= 0
BigInt constant_term(const LambdaPoly& p);

// Coefficient-wise exact division; throws ExactDivisionError on remainder.
LambdaPoly exact_div(const LambdaPoly& p, const BigInt& den);

// Fixed-point generating polynomial of S_n: the lambda^j coefficient is
// C(n, j) * D_{n-j}, the number of permutations with exactly j fixed points.
LambdaPoly rencontres_polynomial(int n);

// The alternating rencontres sum over per-block intersection sizes
//   sum over 0 <= t_i <= a_i of prod (-1)^{t_i} C(a_i, t_i) f(t_i)
//   times f(n - sum t_i),
// divided exactly by a_1! ... a_k!. Constant as a polynomial; its value is
// the number of all-descending-block derangements.
LambdaPoly sieve_polynomial(const std::vector<int>& sizes);

// The same sum taken literally over all 2^n subsets of positions; this is
// the cross-check for the grouped evaluation above. Capped at n = 12.
LambdaPoly sieve_polynomial_subsets(const std::vector<int>& sizes);

// (sum of small_cycle_weight over all of S_n) / (a_1! ... a_k!), exactly.
BigInt normalized_weight_sum(const std::vector<int>& sizes, const Limits& limits = {});

}  // namespace derange
