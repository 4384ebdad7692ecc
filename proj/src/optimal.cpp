#include "elnitsky/optimal.hpp"

#include <algorithm>

namespace elnitsky {

namespace {

void require_domain(const Permutation& v, const char* role) {
    if (v.size() % 2 != 0)
        fail(ErrorCode::DomainViolation, std::string(role) + " must have even size");
    if (!is_alternating(v))
        fail(ErrorCode::DomainViolation, std::string(role) + " must be alternating (down-up)");
    if (!is_321_avoiding(v))
        fail(ErrorCode::DomainViolation, std::string(role) + " must avoid 321");
}

// Splits {1..2m} into the odd-position and even-position chains. Values are
// assigned in increasing order; keeping the even chain ahead of the odd one
// at every prefix is exactly the ballot condition a_k > b_k.
void split_values(int m, int value, std::vector<int>& odds, std::vector<int>& evens,
                  std::vector<Permutation>& out) {
    const int total = 2 * m;
    if (value > total) {
        std::vector<int> entries(static_cast<std::size_t>(total));
        for (int k = 0; k < m; ++k) {
            entries[static_cast<std::size_t>(2 * k)] = odds[static_cast<std::size_t>(k)];
            entries[static_cast<std::size_t>(2 * k + 1)] = evens[static_cast<std::size_t>(k)];
        }
        out.emplace_back(std::move(entries));
        return;
    }
    if (static_cast<int>(evens.size()) < m && evens.size() >= odds.size()) {
        evens.push_back(value);
        split_values(m, value + 1, odds, evens, out);
        evens.pop_back();
    }
    if (static_cast<int>(odds.size()) < m && evens.size() > odds.size()) {
        odds.push_back(value);
        split_values(m, value + 1, odds, evens, out);
        odds.pop_back();
    }
}

} // namespace

bool is_max_forced_right(const Permutation& w) {
    const int n = w.size();
    if (n % 2 != 0) return false;
    for (int k = 1; 2 * k <= n; ++k)
        if (w(2 * k - 1) < w(2 * k)) return false;
    for (int i = 1; i + 2 <= n; ++i)
        if (w(i) > w(i + 2)) return false;
    return true;
}

OptimalWitness make_optimal_witness(const Permutation& w) {
    if (!is_max_forced_right(w))
        fail(ErrorCode::DomainViolation,
             w.str() + " does not have maximally many forced right-perimeter tiles");
    const int m = w.size() / 2;
    // The forced right tiles of a maximal w are {w(2k-1), w(2k)} for each k.
    return OptimalWitness{w, m, m};
}

Permutation phi(const Permutation& v) {
    require_domain(v, "phi argument");
    const int target = v.size() + 2; // 2m
    std::vector<int> entries(static_cast<std::size_t>(target));
    for (int i = 1; i <= target; ++i) {
        int value;
        if (i == 2) value = 1;
        else if (i == target - 1) value = target;
        else if (i % 2 == 1) value = v(i) + 1;
        else value = v(i - 2) + 1;
        entries[static_cast<std::size_t>(i - 1)] = value;
    }
    return Permutation(std::move(entries));
}

Permutation phi_inverse(const Permutation& w) {
    require_domain(w, "phi_inverse argument");
    if (!is_fully_supported(w))
        fail(ErrorCode::DomainViolation, "phi_inverse argument must be fully supported");
    if (w.size() < 4)
        fail(ErrorCode::DomainViolation, "phi_inverse needs size at least 4");
    const int source = w.size() - 2; // 2m - 2
    std::vector<int> entries(static_cast<std::size_t>(source));
    for (int i = 1; i <= source; ++i)
        entries[static_cast<std::size_t>(i - 1)] = (i % 2 == 1 ? w(i) : w(i + 2)) - 1;
    return Permutation(std::move(entries));
}

std::vector<Permutation> enumerate_321_avoiding_alternating(int m) {
    if (m < 1) fail(ErrorCode::DomainViolation, "enumeration needs m >= 1");
    std::vector<Permutation> out;
    std::vector<int> odds, evens;
    split_values(m, 1, odds, evens, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enumerate_max_forced(int m) {
    std::vector<Permutation> out;
    for (Permutation& w : enumerate_321_avoiding_alternating(m))
        if (is_fully_supported(w)) out.push_back(std::move(w));
    return out;
}

std::uint64_t catalan(int k) {
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * 2 * (2 * static_cast<std::uint64_t>(i) - 1) / (i + 1);
    return c;
}

} // namespace elnitsky
