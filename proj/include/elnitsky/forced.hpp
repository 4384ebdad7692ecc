#ifndef ELNITSKY_FORCED_HPP
#define ELNITSKY_FORCED_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elnitsky/perm.hpp"
#include "elnitsky/rational.hpp"
#include "elnitsky/tiling.hpp"

namespace elnitsky {

/// Forced perimeter tiles of every type, with exact appearance frequencies.
/// frequencies[type] has one entry per inversion pair of the owner, sorted
/// by (low, high); forced[type] are exactly the tiles of frequency 1.
struct ForcedReport {
    Permutation owner;
    std::size_t tiling_count = 0;
    std::array<std::vector<ValuePair>, 4> forced;
    std::array<std::vector<std::pair<ValuePair, Rational>>, 4> frequencies;

    const std::vector<ValuePair>& forced_of(PerimeterType type) const {
        return forced[static_cast<std::size_t>(type)];
    }
    Rational frequency_of(PerimeterType type, const ValuePair& tile) const;
};

/// Brute force over all tilings of X(w): a tile is forced for a type when
/// it is a perimeter tile of that type in every tiling.
ForcedReport forced_tiles(const Permutation& w, TilingEnumerator& enumerator);
ForcedReport forced_tiles(const Permutation& w,
                          std::size_t max_classes = kDefaultMaxTilings);

/// Closed-form predictions. Each uses the O(n) extremum formulation; the
/// equivalent 321-pattern formulation is asserted to agree in debug builds.
std::vector<ValuePair> predicted_forced_right(const Permutation& w);
std::vector<ValuePair> predicted_forced_left(const Permutation& w);
std::optional<ValuePair> predicted_forced_top(const Permutation& w);
std::optional<ValuePair> predicted_forced_bottom(const Permutation& w);

Rational tile_frequency(const Permutation& w, const ValuePair& tile, PerimeterType type,
                        std::size_t max_classes = kDefaultMaxTilings);

struct VerifyReport {
    std::string theorem;
    char size_symbol = 'n'; // 'n' for S_n ranges, 'm' for half-size counts
    int size = 0;
    long long checked = 0;
    std::vector<std::string> counterexamples;

    bool passed() const { return counterexamples.empty(); }
};

struct VerifyOptions {
    std::size_t max_classes = kDefaultMaxTilings;
    unsigned threads = 0; // 0: use hardware concurrency
};

/// Exhaustively checks one named statement against brute force over every
/// fully supported w in S_n (or, for "catalan", the counts at half-size m).
/// Names: force-right, force-left, force-top, force-bottom, right-at-top,
/// hexagon, labels, tau, optimal-char, catalan.
VerifyReport verify_theorem(const std::string& name, int size,
                            const VerifyOptions& options = {});

const std::vector<std::string>& verify_theorem_names();

/// All fully supported permutations of S_n, in lexicographic order.
std::vector<Permutation> fully_supported_permutations(int n);

} // namespace elnitsky

#endif
