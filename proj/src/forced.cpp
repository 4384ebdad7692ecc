#include "elnitsky/forced.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <set>
#include <thread>

#include "elnitsky/optimal.hpp"

namespace elnitsky {

namespace {

std::vector<ValuePair> pattern_form_right(const Permutation& w) {
    std::vector<ValuePair> out;
    for (int k : descents(w))
        if (!together_in_321(w, k, k + 1)) out.push_back(make_value_pair(w(k), w(k + 1)));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ValuePair> pattern_form_left(const Permutation& w) {
    std::vector<ValuePair> out;
    const Permutation w_inv = inverse(w);
    for (int k = 1; k < w.size(); ++k) {
        if (w_inv(k) <= w_inv(k + 1)) continue;
        if (!together_in_321(w, w_inv(k + 1), w_inv(k))) out.push_back(ValuePair{k, k + 1});
    }
    return out;
}

std::optional<ValuePair> pattern_form_top(const Permutation& w) {
    if (w(1) == 1) return std::nullopt;
    if (together_in_321(w, 1, w.position_of(1))) return std::nullopt;
    return make_value_pair(1, w(1));
}

std::optional<ValuePair> pattern_form_bottom(const Permutation& w) {
    const int n = w.size();
    if (w(n) == n) return std::nullopt;
    if (together_in_321(w, w.position_of(n), n)) return std::nullopt;
    return make_value_pair(n, w(n));
}

std::string set_str(const std::vector<ValuePair>& tiles) {
    std::string out = "[";
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        if (i) out += " ";
        out += value_pair_str(tiles[i]);
    }
    return out + "]";
}

std::vector<ValuePair> optional_as_set(const std::optional<ValuePair>& tile) {
    if (!tile) return {};
    return {*tile};
}

// Value triples x<y<z occurring in decreasing position order, i.e. the
// labels of 321-pattern occurrences.
std::vector<std::array<int, 3>> pattern_321_triples(const Permutation& w) {
    const int n = w.size();
    const Permutation w_inv = inverse(w);
    std::vector<std::array<int, 3>> out;
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            for (int z = y + 1; z <= n; ++z)
                if (w_inv(z) < w_inv(y) && w_inv(y) < w_inv(x)) out.push_back({x, y, z});
    return out;
}

using TheoremCheck = std::vector<std::string> (*)(const Permutation&, TilingEnumerator&);

std::vector<std::string> check_forced_predicates(const Permutation& w,
                                                 TilingEnumerator& enumerator,
                                                 PerimeterType type) {
    const ForcedReport report = forced_tiles(w, enumerator);
    std::vector<ValuePair> predicted;
    switch (type) {
        case PerimeterType::Right: predicted = predicted_forced_right(w); break;
        case PerimeterType::Left: predicted = predicted_forced_left(w); break;
        case PerimeterType::Top: predicted = optional_as_set(predicted_forced_top(w)); break;
        case PerimeterType::Bottom: predicted = optional_as_set(predicted_forced_bottom(w)); break;
    }
    if (report.forced_of(type) == predicted) return {};
    return {w.str() + ": forced " + perimeter_type_name(type) + " " +
            set_str(report.forced_of(type)) + " != predicted " + set_str(predicted)};
}

std::vector<std::string> check_force_right(const Permutation& w, TilingEnumerator& e) {
    return check_forced_predicates(w, e, PerimeterType::Right);
}
std::vector<std::string> check_force_left(const Permutation& w, TilingEnumerator& e) {
    return check_forced_predicates(w, e, PerimeterType::Left);
}
std::vector<std::string> check_force_top(const Permutation& w, TilingEnumerator& e) {
    return check_forced_predicates(w, e, PerimeterType::Top);
}
std::vector<std::string> check_force_bottom(const Permutation& w, TilingEnumerator& e) {
    return check_forced_predicates(w, e, PerimeterType::Bottom);
}

std::vector<std::string> check_right_at_top(const Permutation& w, TilingEnumerator&) {
    std::vector<std::string> bad;
    const int n = w.size();
    const std::vector<ValuePair> right = predicted_forced_right(w);
    const std::vector<ValuePair> left = predicted_forced_left(w);
    const bool has_top = predicted_forced_top(w).has_value();
    const bool has_bottom = predicted_forced_bottom(w).has_value();
    if (n >= 2) {
        if (contains(right, make_value_pair(w(1), w(2))) && !has_top)
            bad.push_back(w.str() + ": forced right at top without forced top tile");
        if (contains(left, ValuePair{1, 2}) && !has_top)
            bad.push_back(w.str() + ": forced left {1,2} without forced top tile");
        if (contains(right, make_value_pair(w(n - 1), w(n))) && !has_bottom)
            bad.push_back(w.str() + ": forced right at bottom without forced bottom tile");
        if (contains(left, ValuePair{n - 1, n}) && !has_bottom)
            bad.push_back(w.str() + ": forced left {n-1,n} without forced bottom tile");
    }
    return bad;
}

std::vector<std::string> check_hexagon(const Permutation& w, TilingEnumerator& enumerator) {
    std::set<std::array<int, 3>> seen;
    for (const Word& word : enumerator.classes(w)) {
        const Tiling t = place_tiles(w, CommutationClass{word});
        for (const auto& triple : subhexagons(t)) seen.insert(triple);
    }
    const auto patterns = pattern_321_triples(w);
    const std::set<std::array<int, 3>> expected(patterns.begin(), patterns.end());
    if (seen == expected) return {};
    return {w.str() + ": subhexagon triples do not match 321-pattern triples"};
}

std::vector<std::string> check_labels(const Permutation& w, TilingEnumerator& enumerator) {
    const std::vector<ValuePair> expected = inversion_pairs(w);
    for (const Word& word : enumerator.classes(w)) {
        const Tiling t = place_tiles(w, CommutationClass{word});
        std::vector<ValuePair> labels;
        labels.reserve(t.tiles.size());
        for (const Tile& tile : t.tiles) labels.push_back(tile.label);
        std::sort(labels.begin(), labels.end());
        if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
            return {w.str() + ": repeated tile label in a tiling"};
        if (labels != expected)
            return {w.str() + ": tile labels differ from inversion pairs"};
    }
    return {};
}

std::vector<std::string> check_tau(const Permutation& w, TilingEnumerator& enumerator) {
    const Permutation w_inv = inverse(w);
    const std::vector<Word> mine = enumerator.classes(w);
    std::set<Word> reflected;
    for (const Word& word : mine) {
        const CommutationClass image = reverse_class(CommutationClass{word}, w);
        if (!(reverse_class(image, w_inv).canonical == word))
            return {w.str() + ": reversing a class twice did not return it"};
        reflected.insert(image.canonical);
    }
    const std::vector<Word>& theirs = enumerator.classes(w_inv);
    if (reflected.size() != mine.size() ||
        !std::equal(reflected.begin(), reflected.end(), theirs.begin(), theirs.end()))
        return {w.str() + ": reversed classes do not biject onto classes of the inverse"};
    return {};
}

std::vector<std::string> check_optimal_char(const Permutation& w, TilingEnumerator& enumerator) {
    std::vector<std::string> bad;
    const int m = w.size() / 2;
    const ForcedReport report = forced_tiles(w, enumerator);
    const bool maximal = report.forced_of(PerimeterType::Right).size() ==
                         static_cast<std::size_t>(m);
    if (is_max_forced_right(w) != maximal)
        bad.push_back(w.str() + ": interleave characterization disagrees with brute force");
    if (is_max_forced_right(w) != (is_alternating(w) && is_321_avoiding(w)))
        bad.push_back(w.str() + ": characterization disagrees with 321-avoiding alternating");
    return bad;
}

VerifyReport verify_catalan(int m, const VerifyOptions&) {
    VerifyReport report{"catalan", 'm', m, 0, {}};
    if (m < 1) fail(ErrorCode::DomainViolation, "catalan verification needs m >= 1");

    const auto alternating = enumerate_321_avoiding_alternating(m);
    ++report.checked;
    if (alternating.size() != catalan(m))
        report.counterexamples.push_back(
            "321-avoiding alternating count for m=" + std::to_string(m) + " is " +
            std::to_string(alternating.size()) + ", expected C_m = " +
            std::to_string(catalan(m)));

    const auto maximal = enumerate_max_forced(m);
    ++report.checked;
    if (maximal.size() != catalan(m - 1))
        report.counterexamples.push_back(
            "max-forced count for m=" + std::to_string(m) + " is " +
            std::to_string(maximal.size()) + ", expected C_{m-1} = " +
            std::to_string(catalan(m - 1)));

    if (m >= 2) {
        ++report.checked;
        std::vector<Permutation> image;
        for (const Permutation& v : enumerate_321_avoiding_alternating(m - 1))
            image.push_back(phi(v));
        std::sort(image.begin(), image.end());
        if (!(image == maximal))
            report.counterexamples.push_back(
                "phi image of level m-1 differs from max-forced set at m=" +
                std::to_string(m));
    }
    return report;
}

} // namespace

Rational ForcedReport::frequency_of(PerimeterType type, const ValuePair& tile) const {
    const auto& list = frequencies[static_cast<std::size_t>(type)];
    const auto it = std::lower_bound(
        list.begin(), list.end(), tile,
        [](const std::pair<ValuePair, Rational>& entry, const ValuePair& key) {
            return entry.first < key;
        });
    if (it == list.end() || !(it->first == tile)) return Rational(0, 1);
    return it->second;
}

ForcedReport forced_tiles(const Permutation& w, TilingEnumerator& enumerator) {
    if (!is_fully_supported(w))
        fail(ErrorCode::NotFullySupported, w.str() + " is not fully supported");

    const std::vector<ValuePair> pairs = inversion_pairs(w);
    std::map<ValuePair, std::size_t> pair_index;
    for (std::size_t i = 0; i < pairs.size(); ++i) pair_index.emplace(pairs[i], i);

    const PolygonEmbedding polygon = embed_polygon(w);
    std::array<std::vector<std::size_t>, 4> counts;
    for (auto& c : counts) c.assign(pairs.size(), 0);

    const std::vector<Word>& classes = enumerator.classes(w);
    for (const Word& word : classes) {
        const Tiling t = place_tiles(w, CommutationClass{word});
        const auto flags = perimeter_flags(t, polygon);
        for (std::size_t i = 0; i < t.tiles.size(); ++i) {
            const std::size_t label = pair_index.at(t.tiles[i].label);
            for (std::size_t type = 0; type < 4; ++type)
                if (flags[i][type]) ++counts[type][label];
        }
    }

    ForcedReport report{w, classes.size(), {}, {}};
    for (std::size_t type = 0; type < 4; ++type) {
        report.frequencies[type].reserve(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const Rational freq(static_cast<std::int64_t>(counts[type][i]),
                                static_cast<std::int64_t>(classes.size()));
            report.frequencies[type].emplace_back(pairs[i], freq);
            if (counts[type][i] == classes.size()) report.forced[type].push_back(pairs[i]);
        }
    }
    return report;
}

ForcedReport forced_tiles(const Permutation& w, std::size_t max_classes) {
    TilingEnumerator enumerator(max_classes);
    return forced_tiles(w, enumerator);
}

std::vector<ValuePair> predicted_forced_right(const Permutation& w) {
    std::vector<ValuePair> out;
    const std::vector<int> maxima = lr_maxima(w);
    const std::vector<int> minima = rl_minima(w);
    for (int k : descents(w))
        if (contains(maxima, w(k)) && contains(minima, w(k + 1)))
            out.push_back(make_value_pair(w(k), w(k + 1)));
    std::sort(out.begin(), out.end());
    assert(out == pattern_form_right(w));
    return out;
}

std::vector<ValuePair> predicted_forced_left(const Permutation& w) {
    std::vector<ValuePair> out;
    const Permutation w_inv = inverse(w);
    const std::vector<int> maxima = lr_maxima(w);
    const std::vector<int> minima = rl_minima(w);
    for (int k = 1; k < w.size(); ++k)
        if (w_inv(k) > w_inv(k + 1) && contains(maxima, k + 1) && contains(minima, k))
            out.push_back(ValuePair{k, k + 1});
    assert(out == pattern_form_left(w));
    return out;
}

std::optional<ValuePair> predicted_forced_top(const Permutation& w) {
    std::optional<ValuePair> out;
    // The first entry below w(1) is the first LR-minimum after position 1;
    // the tile is forced iff that entry is 1.
    for (int i = 2; i <= w.size(); ++i)
        if (w(i) < w(1)) {
            if (w(i) == 1) out = make_value_pair(1, w(1));
            break;
        }
    assert(out == pattern_form_top(w));
    return out;
}

std::optional<ValuePair> predicted_forced_bottom(const Permutation& w) {
    std::optional<ValuePair> out;
    const int n = w.size();
    // Mirrored: the first entry above w(n), scanning right to left, is the
    // first RL-maximum after w(n); the tile is forced iff it is n.
    for (int i = n - 1; i >= 1; --i)
        if (w(i) > w(n)) {
            if (w(i) == n) out = make_value_pair(n, w(n));
            break;
        }
    assert(out == pattern_form_bottom(w));
    return out;
}

Rational tile_frequency(const Permutation& w, const ValuePair& tile, PerimeterType type,
                        std::size_t max_classes) {
    if (tile.low >= tile.high || tile.low < 1 || tile.high > w.size())
        fail(ErrorCode::DomainViolation,
             "tile " + value_pair_str(tile) + " is not a valid value pair for n=" +
                 std::to_string(w.size()));
    const ForcedReport report = forced_tiles(w, max_classes);
    return report.frequency_of(type, tile);
}

std::vector<Permutation> fully_supported_permutations(int n) {
    std::vector<Permutation> out;
    std::vector<int> entries(static_cast<std::size_t>(n));
    std::iota(entries.begin(), entries.end(), 1);
    do {
        Permutation w(entries);
        if (is_fully_supported(w)) out.push_back(std::move(w));
    } while (std::next_permutation(entries.begin(), entries.end()));
    return out;
}

const std::vector<std::string>& verify_theorem_names() {
    static const std::vector<std::string> names = {
        "force-right", "force-left", "force-top",    "force-bottom", "right-at-top",
        "hexagon",     "labels",     "tau",          "optimal-char", "catalan"};
    return names;
}

VerifyReport verify_theorem(const std::string& name, int size, const VerifyOptions& options) {
    if (name == "catalan") return verify_catalan(size, options);

    TheoremCheck check = nullptr;
    if (name == "force-right") check = check_force_right;
    else if (name == "force-left") check = check_force_left;
    else if (name == "force-top") check = check_force_top;
    else if (name == "force-bottom") check = check_force_bottom;
    else if (name == "right-at-top") check = check_right_at_top;
    else if (name == "hexagon") check = check_hexagon;
    else if (name == "labels") check = check_labels;
    else if (name == "tau") check = check_tau;
    else if (name == "optimal-char") check = check_optimal_char;
    else
        fail(ErrorCode::UnknownTheorem, "no verification named '" + name + "'");

    if (size < 1) fail(ErrorCode::DomainViolation, "verification needs n >= 1");
    if (name == "optimal-char" && size % 2 != 0)
        fail(ErrorCode::DomainViolation, "optimal-char is a statement about even n");

    const std::vector<Permutation> perms = fully_supported_permutations(size);
    VerifyReport report{name, 'n', size, static_cast<long long>(perms.size()), {}};

    unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1u, std::min<unsigned>(threads, 16));
    std::vector<std::vector<std::string>> issues(perms.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        TilingEnumerator enumerator(options.max_classes);
        for (std::size_t i = next.fetch_add(1); i < perms.size(); i = next.fetch_add(1))
            issues[i] = check(perms[i], enumerator);
    };
    if (threads <= 1 || perms.size() < 32) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    for (const auto& list : issues)
        report.counterexamples.insert(report.counterexamples.end(), list.begin(), list.end());
    return report;
}

} // namespace elnitsky
