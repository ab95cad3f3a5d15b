#pragma once

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace derange {

using BigInt = boost::multiprecision::cpp_int;

// Thrown when a division that must come out exact leaves a remainder.
// Every normalization in this library divides a quantity that is an exact
// multiple of the divisor; a remainder means the computation is wrong.
class ExactDivisionError : public std::logic_error {
public:
    ExactDivisionError(const BigInt& num, const BigInt& den)
        : std::logic_error("inexact division: " + num.str() + " / " + den.str()) {}
};

inline BigInt exact_div(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw ExactDivisionError(num, den);
    return q;
}

}  // namespace derange
