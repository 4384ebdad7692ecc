#ifndef ELNITSKY_TEST_HELPERS_HPP
#define ELNITSKY_TEST_HELPERS_HPP

#include <numeric>
#include <vector>

#include "elnitsky/perm.hpp"

namespace elnitsky::testing {

inline Permutation perm(std::initializer_list<int> entries) {
    return Permutation(std::vector<int>(entries));
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> symmetric_group(int n) {
    std::vector<Permutation> out;
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    do {
        out.emplace_back(entries);
    } while (std::next_permutation(entries.begin(), entries.end()));
    return out;
}

/// Triple-loop oracle: do positions i and j lie in a common decreasing
/// triple? Independent of the three-case scan in the library.
inline bool together_in_321_oracle(const Permutation& w, int i, int j) {
    const int n = w.size();
    for (int p1 = 1; p1 <= n; ++p1)
        for (int p2 = p1 + 1; p2 <= n; ++p2)
            for (int p3 = p2 + 1; p3 <= n; ++p3) {
                if (!(w(p1) > w(p2) && w(p2) > w(p3))) continue;
                const bool has_i = (p1 == i || p2 == i || p3 == i);
                const bool has_j = (p1 == j || p2 == j || p3 == j);
                if (has_i && has_j) return true;
            }
    return false;
}

inline bool is_321_avoiding_oracle(const Permutation& w) {
    const int n = w.size();
    for (int p1 = 1; p1 <= n; ++p1)
        for (int p2 = p1 + 1; p2 <= n; ++p2)
            for (int p3 = p2 + 1; p3 <= n; ++p3)
                if (w(p1) > w(p2) && w(p2) > w(p3)) return false;
    return true;
}

} // namespace elnitsky::testing

#endif
