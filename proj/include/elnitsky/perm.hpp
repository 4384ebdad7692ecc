#ifndef ELNITSKY_PERM_HPP
#define ELNITSKY_PERM_HPP

#include <compare>
#include <string>
#include <vector>

#include "elnitsky/errors.hpp"

namespace elnitsky {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-indexed everywhere; the constructor validates bijectivity.
class Permutation {
public:
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }

    /// Value at position i, i.e. w(i) for 1 <= i <= size().
    int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

    /// Position of a value, i.e. w^{-1}(v).
    int position_of(int value) const;

    const std::vector<int>& entries() const { return entries_; }

    /// Right multiplication by the simple reflection s_k: swaps the entries
    /// at positions k and k+1.
    Permutation apply_right_swap(int k) const;

    /// "34251" for n <= 9, comma-separated otherwise.
    std::string str() const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// The unordered label {low < high} of a tile, or any inverted value pair.
struct ValuePair {
    int low = 0;
    int high = 0;

    friend bool operator==(const ValuePair&, const ValuePair&) = default;
    friend auto operator<=>(const ValuePair&, const ValuePair&) = default;
};

ValuePair make_value_pair(int a, int b);

std::string value_pair_str(const ValuePair& p);

Permutation inverse(const Permutation& w);

/// Positions k with w(k) > w(k+1), ascending.
std::vector<int> descents(const Permutation& w);

/// All {x<y} with w^{-1}(x) > w^{-1}(y), sorted by (low, high). The size of
/// this set is the Coxeter length of w.
std::vector<ValuePair> inversion_pairs(const Permutation& w);

/// True iff no proper prefix of the one-line notation equals {1..r}.
/// Equivalently, every simple reflection appears in reduced words for w.
bool is_fully_supported(const Permutation& w);

std::vector<int> lr_maxima(const Permutation& w);
std::vector<int> lr_minima(const Permutation& w);
std::vector<int> rl_maxima(const Permutation& w);
std::vector<int> rl_minima(const Permutation& w);

/// True iff the values at positions i < j extend to a decreasing triple
/// (a 321-pattern) using some third position.
bool together_in_321(const Permutation& w, int i, int j);

bool is_321_avoiding(const Permutation& w);

/// Strict down-up: w(1) > w(2) < w(3) > w(4) < ...
bool is_alternating(const Permutation& w);

bool contains(const std::vector<int>& sorted_values, int v);
bool contains(const std::vector<ValuePair>& sorted_pairs, const ValuePair& p);

} // namespace elnitsky

#endif
