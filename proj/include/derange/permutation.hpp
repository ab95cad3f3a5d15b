#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

namespace derange {

// A permutation of {1,...,n} in one-line notation: entry i-1 holds pi(i).
// n = 0 is the empty permutation. Immutable after construction.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);  // throws if not a bijection on 1..n

    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }  // 1-based
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;  // lexicographic on one-line

private:
    std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Indices i < n with p(i) > p(i+1), ascending.
std::vector<int> descents(const Permutation& p);

std::vector<int> fixed_points(const Permutation& p);   // p(i) == i
std::vector<int> excedances(const Permutation& p);     // p(i) > i
std::vector<int> deficiencies(const Permutation& p);   // p(i) < i

// Disjoint cycles, each rotated to start at its smallest element, listed by
// increasing smallest element.
std::vector<std::vector<int>> cycles(const Permutation& p);

// Delete the fixed point at position i (pre: p(i) = i) and renumber the
// remaining points down past i. Descents, excedances and fixed points all
// transport through the renumbering.
Permutation remove_fixed_point(const Permutation& p, int i);

// Inverse of remove_fixed_point: the unique q on one more point with
// q(j) = j and remove_fixed_point(q, j) = p. Requires 1 <= j <= p.size()+1.
Permutation insert_fixed_point(const Permutation& p, int j);

}  // namespace derange
