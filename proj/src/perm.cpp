#include "elnitsky/perm.hpp"

#include <algorithm>
#include <numeric>

namespace elnitsky {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = static_cast<int>(entries_.size());
    if (n == 0) fail(ErrorCode::NotABijection, "permutation must have at least one entry");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : entries_) {
        if (v < 1 || v > n)
            fail(ErrorCode::NotABijection,
                 "entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v - 1)])
            fail(ErrorCode::NotABijection, "entry " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

int Permutation::position_of(int value) const {
    for (int i = 1; i <= size(); ++i)
        if ((*this)(i) == value) return i;
    fail(ErrorCode::BadPositions, "value " + std::to_string(value) + " not present");
}

Permutation Permutation::apply_right_swap(int k) const {
    if (k < 1 || k >= size())
        fail(ErrorCode::LetterOutOfRange,
             "generator " + std::to_string(k) + " out of range for n=" + std::to_string(size()));
    std::vector<int> e = entries_;
    std::swap(e[static_cast<std::size_t>(k - 1)], e[static_cast<std::size_t>(k)]);
    return Permutation(std::move(e));
}

std::string Permutation::str() const {
    std::string out;
    if (size() <= 9) {
        for (int v : entries_) out += static_cast<char>('0' + v);
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) out += ',';
            out += std::to_string(entries_[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

ValuePair make_value_pair(int a, int b) {
    if (a == b) fail(ErrorCode::DomainViolation, "value pair needs two distinct values");
    return a < b ? ValuePair{a, b} : ValuePair{b, a};
}

std::string value_pair_str(const ValuePair& p) {
    return "{" + std::to_string(p.low) + "," + std::to_string(p.high) + "}";
}

Permutation inverse(const Permutation& w) {
    std::vector<int> e(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) e[static_cast<std::size_t>(w(i) - 1)] = i;
    return Permutation(std::move(e));
}

std::vector<int> descents(const Permutation& w) {
    std::vector<int> out;
    for (int k = 1; k < w.size(); ++k)
        if (w(k) > w(k + 1)) out.push_back(k);
    return out;
}

std::vector<ValuePair> inversion_pairs(const Permutation& w) {
    std::vector<ValuePair> out;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) out.push_back(ValuePair{w(j), w(i)});
    std::sort(out.begin(), out.end());
    return out;
}

bool is_fully_supported(const Permutation& w) {
    int running_max = 0;
    for (int r = 1; r < w.size(); ++r) {
        running_max = std::max(running_max, w(r));
        if (running_max == r) return false;
    }
    return true;
}

std::vector<int> lr_maxima(const Permutation& w) {
    std::vector<int> out;
    int best = 0;
    for (int i = 1; i <= w.size(); ++i)
        if (w(i) > best) {
            out.push_back(w(i));
            best = w(i);
        }
    return out;
}

std::vector<int> lr_minima(const Permutation& w) {
    std::vector<int> out;
    int best = w.size() + 1;
    for (int i = 1; i <= w.size(); ++i)
        if (w(i) < best) {
            out.push_back(w(i));
            best = w(i);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> rl_maxima(const Permutation& w) {
    std::vector<int> out;
    int best = 0;
    for (int i = w.size(); i >= 1; --i)
        if (w(i) > best) {
            out.push_back(w(i));
            best = w(i);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> rl_minima(const Permutation& w) {
    std::vector<int> out;
    int best = w.size() + 1;
    for (int i = w.size(); i >= 1; --i)
        if (w(i) < best) {
            out.push_back(w(i));
            best = w(i);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool together_in_321(const Permutation& w, int i, int j) {
    if (i < 1 || j > w.size() || i >= j)
        fail(ErrorCode::BadPositions,
             "need 1 <= i < j <= n, got i=" + std::to_string(i) + " j=" + std::to_string(j));
    if (w(i) <= w(j)) return false;
    for (int h = 1; h < i; ++h)
        if (w(h) > w(i)) return true;
    for (int h = i + 1; h < j; ++h)
        if (w(i) > w(h) && w(h) > w(j)) return true;
    for (int h = j + 1; h <= w.size(); ++h)
        if (w(h) < w(j)) return true;
    return false;
}

bool is_321_avoiding(const Permutation& w) {
    // w contains 321 iff some entry has a larger one before it and a smaller
    // one after it.
    const int n = w.size();
    int prefix_max = 0;
    std::vector<int> suffix_min(static_cast<std::size_t>(n) + 2, n + 1);
    for (int i = n; i >= 1; --i)
        suffix_min[static_cast<std::size_t>(i)] =
            std::min(suffix_min[static_cast<std::size_t>(i) + 1], w(i));
    for (int i = 1; i <= n; ++i) {
        if (prefix_max > w(i) && suffix_min[static_cast<std::size_t>(i) + 1] < w(i)) return false;
        prefix_max = std::max(prefix_max, w(i));
    }
    return true;
}

bool is_alternating(const Permutation& w) {
    for (int i = 1; i < w.size(); ++i) {
        if (i % 2 == 1 && w(i) < w(i + 1)) return false;
        if (i % 2 == 0 && w(i) > w(i + 1)) return false;
    }
    return true;
}

bool contains(const std::vector<int>& sorted_values, int v) {
    return std::binary_search(sorted_values.begin(), sorted_values.end(), v);
}

bool contains(const std::vector<ValuePair>& sorted_pairs, const ValuePair& p) {
    return std::binary_search(sorted_pairs.begin(), sorted_pairs.end(), p);
}

} // namespace elnitsky
