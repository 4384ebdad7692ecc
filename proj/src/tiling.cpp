#include "elnitsky/tiling.hpp"

#include <algorithm>
#include <map>

namespace elnitsky {

namespace {

std::string memo_key(const Permutation& w) {
    std::string key;
    key.reserve(2 * static_cast<std::size_t>(w.size()));
    for (int v : w.entries()) {
        key += static_cast<char>(v & 0xff);
        key += static_cast<char>((v >> 8) & 0xff);
    }
    return key;
}

void require_full_support(const Permutation& w) {
    if (!is_fully_supported(w))
        fail(ErrorCode::NotFullySupported,
             w.str() + " is not fully supported; X(w) is not a single tiling region");
}

// Index of the boundary segment (V_{j-1}, V_j) in `path`, or 0 if the
// segment is not on the path. Indices are 1-based.
int segment_index(const std::vector<Point>& path, const Segment& s) {
    for (std::size_t j = 1; j < path.size(); ++j)
        if (Segment(path[j - 1], path[j]) == s) return static_cast<int>(j);
    return 0;
}

} // namespace

const char* perimeter_type_name(PerimeterType type) {
    switch (type) {
        case PerimeterType::Left: return "left";
        case PerimeterType::Right: return "right";
        case PerimeterType::Top: return "top";
        case PerimeterType::Bottom: return "bottom";
    }
    return "?";
}

PolygonEmbedding embed_polygon(const Permutation& w) {
    require_full_support(w);
    const int n = w.size();
    PolygonEmbedding poly;
    poly.n = n;
    poly.directions.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i)
        poly.directions[static_cast<std::size_t>(i)] = Point{2LL * i - n - 1, -2};
    poly.left.resize(static_cast<std::size_t>(n) + 1);
    poly.right.resize(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n; ++j) {
        poly.left[static_cast<std::size_t>(j)] =
            poly.left[static_cast<std::size_t>(j - 1)] + poly.direction(j);
        poly.right[static_cast<std::size_t>(j)] =
            poly.right[static_cast<std::size_t>(j - 1)] + poly.direction(w(j));
    }
    return poly;
}

Tiling place_tiles(const Permutation& w, const CommutationClass& cls) {
    const int n = w.size();
    const Permutation evaluated = evaluate(cls.canonical, n);
    if (!(evaluated == w))
        fail(ErrorCode::ClassPermutationMismatch,
             "word evaluates to " + evaluated.str() + ", not " + w.str());

    std::vector<Point> dirs(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) dirs[static_cast<std::size_t>(i)] = Point{2LL * i - n - 1, -2};

    Tiling out{cls, w, {}};
    out.tiles.reserve(cls.canonical.size());
    walk_strands(n, cls.canonical, [&](std::size_t, int row, const std::vector<int>& strands) {
        Point corner;
        for (int i = 0; i < row - 1; ++i)
            corner = corner + dirs[static_cast<std::size_t>(strands[static_cast<std::size_t>(i)])];
        const int a = strands[static_cast<std::size_t>(row - 1)];
        const int b = strands[static_cast<std::size_t>(row)];
        out.tiles.push_back(Tile{make_value_pair(a, b), row, corner,
                                 dirs[static_cast<std::size_t>(a)],
                                 dirs[static_cast<std::size_t>(b)]});
    });
    return out;
}

const std::vector<Word>& TilingEnumerator::classes(const Permutation& w) {
    const std::string key = memo_key(w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<Word> result;
    const std::vector<int> ds = descents(w);
    if (ds.empty()) {
        result.push_back(Word{});
    } else {
        std::vector<Word> candidates;
        for (int k : ds) {
            const std::vector<Word>& sub = classes(w.apply_right_swap(k));
            for (const Word& c : sub) {
                Word extended = c;
                extended.push_back(k);
                candidates.push_back(canonical_form(extended));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        if (candidates.size() > max_classes_)
            fail(ErrorCode::SizeLimitExceeded,
                 "tiling enumeration for " + w.str() + " exceeded cap of " +
                     std::to_string(max_classes_));
        result = std::move(candidates);
    }
    return memo_.emplace(key, std::move(result)).first->second;
}

std::vector<Tiling> tilings(const Permutation& w, TilingEnumerator& enumerator) {
    require_full_support(w);
    std::vector<Tiling> out;
    const std::vector<Word>& words = enumerator.classes(w);
    out.reserve(words.size());
    for (const Word& c : words) out.push_back(place_tiles(w, CommutationClass{c}));
    return out;
}

std::vector<Tiling> tilings(const Permutation& w, std::size_t max_classes) {
    TilingEnumerator enumerator(max_classes);
    return tilings(w, enumerator);
}

std::size_t count_tilings(const Permutation& w, std::size_t max_classes) {
    require_full_support(w);
    TilingEnumerator enumerator(max_classes);
    return enumerator.count(w);
}

std::vector<std::array<bool, 4>> perimeter_flags(const Tiling& t,
                                                 const PolygonEmbedding& polygon) {
    const int n = polygon.n;
    std::vector<std::array<bool, 4>> flags(t.tiles.size(), {false, false, false, false});
    std::vector<char> on_left(static_cast<std::size_t>(n) + 1);
    std::vector<char> on_right(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < t.tiles.size(); ++i) {
        std::fill(on_left.begin(), on_left.end(), 0);
        std::fill(on_right.begin(), on_right.end(), 0);
        for (const Segment& e : t.tiles[i].edges()) {
            if (int j = segment_index(polygon.left, e); j > 0)
                on_left[static_cast<std::size_t>(j)] = 1;
            if (int j = segment_index(polygon.right, e); j > 0)
                on_right[static_cast<std::size_t>(j)] = 1;
        }
        // Two consecutive shared boundary edges make a perimeter tile.
        for (int j = 1; j < n; ++j) {
            if (on_left[static_cast<std::size_t>(j)] && on_left[static_cast<std::size_t>(j) + 1])
                flags[i][0] = true;
            if (on_right[static_cast<std::size_t>(j)] && on_right[static_cast<std::size_t>(j) + 1])
                flags[i][1] = true;
        }
        flags[i][2] = on_left[1] && on_right[1];
        flags[i][3] = on_left[static_cast<std::size_t>(n)] && on_right[static_cast<std::size_t>(n)];
    }
    return flags;
}

std::vector<Tile> perimeter_tiles(const Tiling& t, PerimeterType type) {
    const PolygonEmbedding polygon = embed_polygon(t.owner);
    const auto flags = perimeter_flags(t, polygon);
    const auto type_index = static_cast<std::size_t>(type);
    std::vector<Tile> out;
    for (std::size_t i = 0; i < t.tiles.size(); ++i)
        if (flags[i][type_index]) out.push_back(t.tiles[i]);
    return out;
}

std::vector<std::array<int, 3>> subhexagons(const Tiling& t) {
    const int n = t.owner.size();
    std::map<ValuePair, std::size_t> by_label;
    for (std::size_t i = 0; i < t.tiles.size(); ++i) by_label.emplace(t.tiles[i].label, i);

    auto share_edge = [&](std::size_t i, std::size_t j) {
        for (const Segment& e : t.tiles[i].edges())
            for (const Segment& f : t.tiles[j].edges())
                if (e == f) return true;
        return false;
    };
    auto common_vertex = [&](std::size_t i, std::size_t j, std::size_t k) {
        for (const Point& p : t.tiles[i].vertices())
            for (const Point& q : t.tiles[j].vertices())
                if (p == q)
                    for (const Point& r : t.tiles[k].vertices())
                        if (p == r) return true;
        return false;
    };

    std::vector<std::array<int, 3>> out;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
            const auto xy = by_label.find(ValuePair{x, y});
            if (xy == by_label.end()) continue;
            for (int z = y + 1; z <= n; ++z) {
                const auto xz = by_label.find(ValuePair{x, z});
                if (xz == by_label.end()) continue;
                const auto yz = by_label.find(ValuePair{y, z});
                if (yz == by_label.end()) continue;
                if (share_edge(xy->second, xz->second) && share_edge(xy->second, yz->second) &&
                    share_edge(xz->second, yz->second) &&
                    common_vertex(xy->second, xz->second, yz->second))
                    out.push_back({x, y, z});
            }
        }
    return out;
}

Tiling transpose_tiling(const Tiling& t) {
    const Permutation w_inv = inverse(t.owner);
    return place_tiles(w_inv, reverse_class(t.cls, t.owner));
}

} // namespace elnitsky
