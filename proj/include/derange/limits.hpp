#pragma once

#include <stdexcept>
#include <string>

namespace derange {

// Size caps for the exhaustive back ends. Enumeration visits one permutation
// per ordered distribution of values into blocks (multinomial(n; a) items);
// full scans walk all n! permutations.
struct Limits {
    int enumeration_n = 10;
    int full_scan_n = 9;
};

class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& message) : std::runtime_error(message) {}
    LimitError(const std::string& what, int n, int limit)
        : std::runtime_error(what + ": n = " + std::to_string(n) + " exceeds limit " +
                             std::to_string(limit)) {}
};

}  // namespace derange
