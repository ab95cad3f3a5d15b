#include "derange/permutation.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace derange {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    for (int i = 1; i <= p.size(); ++i) {
        if (i > 1) os << ' ';
        os << p(i);
    }
    return os;
}

std::vector<int> descents(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i < p.size(); ++i)
        if (p(i) > p(i + 1)) out.push_back(i);
    return out;
}

std::vector<int> fixed_points(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) == i) out.push_back(i);
    return out;
}

std::vector<int> excedances(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) > i) out.push_back(i);
    return out;
}

std::vector<int> deficiencies(const Permutation& p) {
    std::vector<int> out;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) < i) out.push_back(i);
    return out;
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(n + 1, 0);
    std::vector<std::vector<int>> out;
    for (int start = 1; start <= n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (int j = start; !seen[j]; j = p(j)) {
            seen[j] = 1;
            cycle.push_back(j);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

Permutation remove_fixed_point(const Permutation& p, int i) {
    const int n = p.size();
    if (i < 1 || i > n || p(i) != i)
        throw std::invalid_argument("remove_fixed_point: position is not a fixed point");
    std::vector<int> images;
    images.reserve(n - 1);
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        const int v = p(j);
        images.push_back(v > i ? v - 1 : v);
    }
    return Permutation(std::move(images));
}

Permutation insert_fixed_point(const Permutation& p, int j) {
    const int n = p.size() + 1;
    if (j < 1 || j > n) throw std::invalid_argument("insert_fixed_point: index out of range");
    std::vector<int> images;
    images.reserve(n);
    for (int x = 1; x <= n; ++x) {
        if (x == j) {
            images.push_back(j);
            continue;
        }
        const int v = p(x < j ? x : x - 1);
        images.push_back(v >= j ? v + 1 : v);
    }
    return Permutation(std::move(images));
}

}  // namespace derange
