#include "derange/series.hpp"

#include <stdexcept>
#include <utility>

namespace derange {

TruncatedSeries::TruncatedSeries(std::vector<int> bounds) : bounds_(std::move(bounds)) {
    strides_.resize(bounds_.size());
    std::size_t box = 1;
    for (int i = variable_count() - 1; i >= 0; --i) {
        if (bounds_[i] < 0) throw std::invalid_argument("TruncatedSeries: negative bound");
        strides_[i] = box;
        box *= static_cast<std::size_t>(bounds_[i]) + 1;
    }
    coeffs_.assign(box, BigInt(0));
}

std::size_t TruncatedSeries::index_of(const std::vector<int>& expo) const {
    if (expo.size() != bounds_.size())
        throw std::invalid_argument("TruncatedSeries: exponent arity mismatch");
    std::size_t idx = 0;
    for (int i = 0; i < variable_count(); ++i) {
        if (expo[i] < 0 || expo[i] > bounds_[i])
            throw std::out_of_range("TruncatedSeries: exponent outside the truncation box");
        idx += static_cast<std::size_t>(expo[i]) * strides_[i];
    }
    return idx;
}

TruncatedSeries geometric_all(std::vector<int> bounds) {
    TruncatedSeries out(std::move(bounds));
    const int k = out.variable_count();
    std::vector<int> e(k, 0);
    for (std::size_t idx = 0; idx < out.coeffs_.size(); ++idx) {
        if (idx == 0) {
            out.coeffs_[0] = 1;
        } else {
            BigInt v = 0;
            for (int i = 0; i < k; ++i)
                if (e[i] > 0) v += out.coeffs_[idx - out.strides_[i]];
            out.coeffs_[idx] = std::move(v);
        }
        for (int i = k - 1; i >= 0; --i) {  // advance the exponent odometer
            if (++e[i] <= out.bounds_[i]) break;
            e[i] = 0;
        }
    }
    return out;
}

// out[e] = in[e] -+ prev[e - e_var], where prev is the input (multiply) or
// the output so far (divide). A single ascending pass over the linear index
// visits e - e_var before e for every axis.
TruncatedSeries axis_combine(const TruncatedSeries& s, int var, bool negate, bool recurrent) {
    if (var < 1 || var > s.variable_count())
        throw std::out_of_range("series: variable index out of range");
    TruncatedSeries out(s.bounds_);
    const std::size_t stride = s.strides_[var - 1];
    const std::size_t extent = static_cast<std::size_t>(s.bounds_[var - 1]) + 1;
    for (std::size_t idx = 0; idx < s.coeffs_.size(); ++idx) {
        BigInt v = s.coeffs_[idx];
        if ((idx / stride) % extent > 0) {
            const BigInt& prev =
                recurrent ? out.coeffs_[idx - stride] : s.coeffs_[idx - stride];
            if (negate) v -= prev; else v += prev;
        }
        out.coeffs_[idx] = std::move(v);
    }
    return out;
}

TruncatedSeries mul_one_minus(const TruncatedSeries& s, int var) {
    return axis_combine(s, var, /*negate=*/true, /*recurrent=*/false);
}

TruncatedSeries mul_one_plus(const TruncatedSeries& s, int var) {
    return axis_combine(s, var, /*negate=*/false, /*recurrent=*/false);
}

TruncatedSeries div_one_plus(const TruncatedSeries& s, int var) {
    return axis_combine(s, var, /*negate=*/true, /*recurrent=*/true);
}

TruncatedSeries div_one_minus(const TruncatedSeries& s, int var) {
    return axis_combine(s, var, /*negate=*/false, /*recurrent=*/true);
}

BigInt count_genfunc(const BlockSpec& spec) {
    TruncatedSeries s = geometric_all(spec.sizes());
    for (int i = 1; i <= spec.block_count(); ++i)
        s = spec.descends(i) ? div_one_plus(s, i) : mul_one_minus(s, i);
    return s.coeff(spec.sizes());
}

}  // namespace derange
