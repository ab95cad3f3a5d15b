#pragma once

#include <cstddef>
#include <vector>

#include "derange/bigint.hpp"
#include "derange/block_spec.hpp"

namespace derange {

// Dense k-variate integer power series truncated at a per-variable degree
// cap. Arithmetic is exact modulo discarding any term whose exponent exceeds
// its cap. Storage is row-major with the last variable fastest.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::vector<int> bounds);  // the zero series

    int variable_count() const { return static_cast<int>(bounds_.size()); }
    const std::vector<int>& bounds() const { return bounds_; }
    std::size_t cell_count() const { return coeffs_.size(); }

    const BigInt& coeff(const std::vector<int>& expo) const { return coeffs_[index_of(expo)]; }
    void set_coeff(const std::vector<int>& expo, BigInt value) {
        coeffs_[index_of(expo)] = std::move(value);
    }

    bool operator==(const TruncatedSeries&) const = default;

private:
    friend TruncatedSeries geometric_all(std::vector<int> bounds);
    friend TruncatedSeries axis_combine(const TruncatedSeries& s, int var, bool negate,
                                        bool recurrent);

    std::size_t index_of(const std::vector<int>& expo) const;

    std::vector<int> bounds_;
    std::vector<std::size_t> strides_;
    std::vector<BigInt> coeffs_;
};

// Truncation of 1/(1 - x_1 - ... - x_k); the coefficient of x^e is
// multinomial(e).
TruncatedSeries geometric_all(std::vector<int> bounds);

// Multiply or divide by (1 -+ x_var), exactly under truncation. var is
// 1-based. Division runs the recurrence out[e] = in[e] -+ out[e - e_var]
// along the axis, which is the truncated inverse of the matching multiply.
TruncatedSeries mul_one_minus(const TruncatedSeries& s, int var);
TruncatedSeries mul_one_plus(const TruncatedSeries& s, int var);
TruncatedSeries div_one_minus(const TruncatedSeries& s, int var);
TruncatedSeries div_one_plus(const TruncatedSeries& s, int var);

// Coefficient of x_1^{a_1} ... x_k^{a_k} in the block generating function:
// geometric_all shaped by (1 - x_i) for each ascending block and by
// 1/(1 + x_i) for each descending one.
BigInt count_genfunc(const BlockSpec& spec);

}  // namespace derange
