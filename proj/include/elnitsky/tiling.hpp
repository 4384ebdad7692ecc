#ifndef ELNITSKY_TILING_HPP
#define ELNITSKY_TILING_HPP

#include <array>
#include <cstdint>
#include <utility>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "elnitsky/perm.hpp"
#include "elnitsky/words.hpp"

namespace elnitsky {

/// Exact planar point. The polygon embedding uses the integer direction
/// vectors d_i = (2i - n - 1, -2), which are pairwise non-parallel and keep
/// every statement about parallelism, adjacency and area in exact integer
/// arithmetic. The usual equilateral picture is a render-time transform of
/// the same data.
struct Point {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
};

inline long long cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

/// Unordered segment: endpoints stored in sorted order so coincidence is
/// plain equality.
struct Segment {
    Point a;
    Point b;

    Segment(Point p, Point q) {
        if (q < p) std::swap(p, q);
        a = p;
        b = q;
    }

    friend bool operator==(const Segment&, const Segment&) = default;
    friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// X(w) embedded exactly: left boundary is the identity strand path, right
/// boundary the w path. Sides with equal labels are parallel by
/// construction, and L_0 = R_0 (top vertex), L_n = R_n (bottom vertex).
struct PolygonEmbedding {
    int n = 0;
    std::vector<Point> left;       // L_0..L_n
    std::vector<Point> right;      // R_0..R_n
    std::vector<Point> directions; // d_1..d_n at index 1..n (index 0 unused)

    const Point& direction(int label) const {
        return directions[static_cast<std::size_t>(label)];
    }
};

enum class PerimeterType { Left, Right, Top, Bottom };

constexpr std::array<PerimeterType, 4> kPerimeterTypes = {
    PerimeterType::Left, PerimeterType::Right, PerimeterType::Top, PerimeterType::Bottom};

const char* perimeter_type_name(PerimeterType type);

/// One rhombus. `label` doubles as the identity of the tile within a tiling
/// (no two tiles of one tiling share a label); `corner` is the topmost
/// vertex and `edge_a`, `edge_b` the two spanning directions in strand
/// order.
struct Tile {
    ValuePair label;
    int row = 0;
    Point corner;
    Point edge_a;
    Point edge_b;

    std::array<Point, 4> vertices() const {
        return {corner, corner + edge_a, corner + edge_a + edge_b, corner + edge_b};
    }
    std::array<Segment, 4> edges() const {
        return {Segment(corner, corner + edge_a),
                Segment(corner, corner + edge_b),
                Segment(corner + edge_a, corner + edge_a + edge_b),
                Segment(corner + edge_b, corner + edge_a + edge_b)};
    }
};

/// One rhombic tiling of X(owner): a commutation class plus the placed
/// tiles, in canonical-word order.
struct Tiling {
    CommutationClass cls;
    Permutation owner;
    std::vector<Tile> tiles;
};

PolygonEmbedding embed_polygon(const Permutation& w);

/// Walks `word` acting on the identity arrangement of n strands;
/// visit(step, row, strands) sees the strand order before the swap at
/// positions row, row+1. Shared by exact tile placement and rendering.
template <typename Visitor>
void walk_strands(int n, const Word& word, Visitor&& visit) {
    std::vector<int> strands(static_cast<std::size_t>(n));
    std::iota(strands.begin(), strands.end(), 1);
    for (std::size_t t = 0; t < word.size(); ++t) {
        const int row = word[t];
        visit(t, row, std::as_const(strands));
        std::swap(strands[static_cast<std::size_t>(row - 1)],
                  strands[static_cast<std::size_t>(row)]);
    }
}

Tiling place_tiles(const Permutation& w, const CommutationClass& cls);

/// Class-first enumeration of T(w) with a memo on sub-permutations. One
/// instance can be reused across many permutations; the memo is shared.
class TilingEnumerator {
public:
    explicit TilingEnumerator(std::size_t max_classes = kDefaultMaxTilings)
        : max_classes_(max_classes) {}

    /// Canonical words of the commutation classes of w, sorted. Defined for
    /// every permutation (full support is not needed below the top level).
    const std::vector<Word>& classes(const Permutation& w);

    std::size_t count(const Permutation& w) { return classes(w).size(); }

    std::size_t max_classes() const { return max_classes_; }

private:
    std::size_t max_classes_;
    std::unordered_map<std::string, std::vector<Word>> memo_;
};

/// All rhombic tilings of X(w), sorted by canonical word. Requires full
/// support: otherwise the polygon pinches to a point and is not a single
/// tiling region.
std::vector<Tiling> tilings(const Permutation& w,
                            std::size_t max_classes = kDefaultMaxTilings);
std::vector<Tiling> tilings(const Permutation& w, TilingEnumerator& enumerator);

std::size_t count_tilings(const Permutation& w,
                          std::size_t max_classes = kDefaultMaxTilings);

std::vector<Tile> perimeter_tiles(const Tiling& t, PerimeterType type);

/// Per-tile perimeter flags, one pass over all four types.
/// flags[i][type as index] is true when tile i is a perimeter tile of that
/// type.
std::vector<std::array<bool, 4>> perimeter_flags(const Tiling& t,
                                                 const PolygonEmbedding& polygon);

/// Value triples {x<y<z} whose three tiles form a hexagon: pairwise sharing
/// a full edge and all meeting in one vertex.
std::vector<std::array<int, 3>> subhexagons(const Tiling& t);

/// The tiling of X(w^{-1}) whose class is the reversal of t's class.
Tiling transpose_tiling(const Tiling& t);

} // namespace elnitsky

#endif
