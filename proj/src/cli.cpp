#include "elnitsky/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "elnitsky/forced.hpp"
#include "elnitsky/optimal.hpp"
#include "elnitsky/render.hpp"
#include "elnitsky/tiling.hpp"
#include "elnitsky/words.hpp"

namespace elnitsky::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    std::size_t max_tilings = kDefaultMaxTilings;
    std::size_t max_words = kDefaultMaxWords;
};

void add_cap_options(CLI::App* sub, Caps& caps) {
    sub->add_option("--max-tilings", caps.max_tilings, "Cap on enumerated tilings per polygon")
        ->envname("ELNITSKY_MAX_TILINGS");
    sub->add_option("--max-words", caps.max_words, "Cap on enumerated reduced words per class");
}

long long parse_integer(const std::string& token) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw UsageError("'" + token + "' is not an integer");
    }
    if (used != token.size()) throw UsageError("'" + token + "' is not an integer");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

PerimeterType parse_type(const std::string& name) {
    for (PerimeterType type : kPerimeterTypes)
        if (name == perimeter_type_name(type)) return type;
    throw UsageError("unknown perimeter type '" + name + "' (left|right|top|bottom)");
}

json perm_json(const Permutation& w) { return json(w.entries()); }

json pair_json(const ValuePair& p) { return json::array({p.low, p.high}); }

json pairs_json(const std::vector<ValuePair>& pairs) {
    json out = json::array();
    for (const ValuePair& p : pairs) out.push_back(pair_json(p));
    return out;
}

json rational_json(const Rational& r) { return json{{"num", r.num}, {"den", r.den}}; }

void emit(std::ostream& out, const json& value) { out << value.dump(2) << "\n"; }

std::string word_str(const Word& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(word[i]);
    }
    return out.empty() ? "(empty)" : out;
}

void cmd_tilings(std::ostream& out, const std::string& perm_text, bool list, bool as_json,
                 const Caps& caps) {
    const Permutation w = parse_permutation(perm_text);
    const std::vector<Tiling> all = tilings(w, caps.max_tilings);
    if (!list) {
        if (as_json)
            emit(out, json{{"perm", perm_json(w)}, {"count", all.size()}});
        else
            out << all.size() << "\n";
        return;
    }
    if (as_json) {
        json entries = json::array();
        for (const Tiling& t : all) {
            json tiles = json::array();
            for (const Tile& tile : t.tiles) tiles.push_back(pair_json(tile.label));
            entries.push_back(json{{"word", t.cls.canonical},
                                   {"word_count", class_size(t.cls, caps.max_words)},
                                   {"tiles", tiles}});
        }
        emit(out, json{{"perm", perm_json(w)}, {"count", all.size()}, {"tilings", entries}});
        return;
    }
    out << all.size() << " tiling" << (all.size() == 1 ? "" : "s") << " of " << w.str() << "\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
        out << "[" << (i + 1) << "] word: " << word_str(all[i].cls.canonical) << "  tiles:";
        for (const Tile& tile : all[i].tiles) out << " " << value_pair_str(tile.label);
        out << "\n";
    }
}

void cmd_forced(std::ostream& out, const std::string& perm_text, const std::string& type_name,
                bool as_json, const Caps& caps) {
    const Permutation w = parse_permutation(perm_text);
    const ForcedReport report = forced_tiles(w, caps.max_tilings);

    std::vector<PerimeterType> selected;
    if (type_name == "all")
        selected.assign(kPerimeterTypes.begin(), kPerimeterTypes.end());
    else
        selected.push_back(parse_type(type_name));

    if (as_json) {
        json forced = json::object();
        json frequencies = json::object();
        for (PerimeterType type : selected) {
            forced[perimeter_type_name(type)] = pairs_json(report.forced_of(type));
            json per_type = json::array();
            for (const auto& [tile, freq] :
                 report.frequencies[static_cast<std::size_t>(type)])
                per_type.push_back(json{{"tile", pair_json(tile)},
                                        {"frequency", rational_json(freq)}});
            frequencies[perimeter_type_name(type)] = per_type;
        }
        emit(out, json{{"perm", perm_json(w)},
                       {"tiling_count", report.tiling_count},
                       {"forced", forced},
                       {"frequencies", frequencies}});
        return;
    }
    out << "perm " << w.str() << ": " << report.tiling_count << " tiling"
        << (report.tiling_count == 1 ? "" : "s") << "\n";
    for (PerimeterType type : selected) {
        out << "forced " << perimeter_type_name(type) << ":";
        const auto& tiles = report.forced_of(type);
        if (tiles.empty()) out << " (none)";
        for (const ValuePair& tile : tiles) out << " " << value_pair_str(tile);
        out << "\n";
    }
}

void cmd_freq(std::ostream& out, const std::string& perm_text, const std::string& tile_text,
              const std::string& type_name, bool as_json, const Caps& caps) {
    const Permutation w = parse_permutation(perm_text);
    const PerimeterType type = parse_type(type_name);
    const std::vector<std::string> parts = split(tile_text, ',');
    if (parts.size() != 2) throw UsageError("--tile expects two values, e.g. --tile 1,5");
    const int a = static_cast<int>(parse_integer(parts[0]));
    const int b = static_cast<int>(parse_integer(parts[1]));
    const ValuePair tile = make_value_pair(a, b); // unordered label

    const Rational freq = tile_frequency(w, tile, type, caps.max_tilings);
    if (as_json)
        emit(out, json{{"perm", perm_json(w)},
                       {"tile", pair_json(tile)},
                       {"type", perimeter_type_name(type)},
                       {"frequency", rational_json(freq)}});
    else
        out << freq.str() << "\n";
}

void cmd_verify(std::ostream& out, const std::string& name, std::optional<int> n,
                std::optional<int> m, unsigned threads, const Caps& caps) {
    VerifyOptions options;
    options.max_classes = caps.max_tilings;
    options.threads = threads;

    int size = 0;
    if (name == "catalan") {
        if (!m) throw UsageError("verify catalan needs --m");
        size = *m;
    } else if (n && m) {
        throw UsageError("give either --n or --m, not both");
    } else if (n) {
        size = *n;
    } else if (m) {
        size = 2 * *m; // half-size shorthand for statements about S_{2m}
    } else {
        throw UsageError("verify needs --n (or --m)");
    }

    const VerifyReport report = verify_theorem(name, size, options);
    json result{{"theorem", report.theorem},
                {"checked", report.checked},
                {"counterexamples", report.counterexamples}};
    result[std::string(1, report.size_symbol)] = report.size;
    emit(out, result);
}

void cmd_optimal(std::ostream& out, int m, bool list, bool as_json) {
    const std::vector<Permutation> witnesses = enumerate_max_forced(m);
    if (as_json) {
        json result{{"m", m}, {"count", witnesses.size()}};
        if (list) {
            json entries = json::array();
            for (const Permutation& w : witnesses) entries.push_back(perm_json(w));
            result["witnesses"] = entries;
        }
        emit(out, result);
        return;
    }
    if (!list) {
        out << witnesses.size() << "\n";
        return;
    }
    for (const Permutation& w : witnesses) out << w.str() << "\n";
}

void cmd_phi(std::ostream& out, const std::string& perm_text, bool inverse_map, bool as_json) {
    const Permutation input = parse_permutation(perm_text);
    const Permutation output = inverse_map ? phi_inverse(input) : phi(input);
    if (as_json)
        emit(out, json{{"input", perm_json(input)}, {"output", perm_json(output)}});
    else
        out << output.str() << "\n";
}

void cmd_render(std::ostream& out, const std::string& perm_text, int index, bool all,
                const std::string& path, const RenderOptions& options, const Caps& caps) {
    const Permutation w = parse_permutation(perm_text);
    const std::vector<Tiling> every = tilings(w, caps.max_tilings);

    std::vector<Tiling> chosen;
    if (all) {
        chosen = every;
    } else {
        if (index < 1 || static_cast<std::size_t>(index) > every.size())
            throw UsageError("--tiling index out of range 1.." + std::to_string(every.size()));
        chosen.push_back(every[static_cast<std::size_t>(index - 1)]);
    }

    const std::string svg = render_tilings(chosen, options);
    std::ofstream file(path, std::ios::binary);
    file << svg;
    if (!file.good())
        fail(ErrorCode::IoError, "could not write " + path);
    file.close();

    std::size_t tile_total = 0;
    for (const Tiling& t : chosen) tile_total += t.tiles.size();
    out << "wrote " << path << " (" << chosen.size() << " tiling"
        << (chosen.size() == 1 ? "" : "s") << ", " << tile_total << " tiles)\n";
}

} // namespace

Permutation parse_permutation(const std::string& text) {
    if (text.empty()) throw UsageError("empty permutation");
    std::vector<int> entries;
    if (text.find(',') != std::string::npos) {
        for (const std::string& token : split(text, ','))
            entries.push_back(static_cast<int>(parse_integer(token)));
    } else {
        if (!std::all_of(text.begin(), text.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
            throw UsageError("'" + text + "' is not a permutation; use digits or comma form");
        if (text.size() > 9)
            throw UsageError("compact digit form is only for n <= 9; use commas");
        for (char c : text) entries.push_back(c - '0');
    }
    return Permutation(std::move(entries));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rhombic tilings of Elnitsky polygons: enumeration, forced perimeter "
                 "tiles, and exhaustive verification",
                 "elnitsky"};
    app.require_subcommand(1);

    std::string perm_text, type_name = "all", tile_text, verify_name, out_path;
    bool list = false, count = false, as_json = false, inverse_map = false, all = false;
    bool shade = false, integer_geometry = false;
    int m = 0, tiling_index = 1;
    unsigned threads = 0;
    double scale = 40.0;
    std::optional<int> verify_n, verify_m;
    Caps caps;

    CLI::App* tilings_cmd = app.add_subcommand("tilings", "Enumerate or count tilings of X(w)");
    tilings_cmd->add_option("perm", perm_text, "Permutation in one-line notation")->required();
    CLI::Option* count_flag = tilings_cmd->add_flag("--count", count, "Print the count only");
    tilings_cmd->add_flag("--list", list, "List every tiling")->excludes(count_flag);
    tilings_cmd->add_flag("--json", as_json, "Machine-readable output");
    add_cap_options(tilings_cmd, caps);

    CLI::App* forced_cmd = app.add_subcommand("forced", "Forced perimeter tiles of X(w)");
    forced_cmd->add_option("perm", perm_text)->required();
    forced_cmd->add_option("--type", type_name, "left|right|top|bottom|all");
    forced_cmd->add_flag("--json", as_json);
    add_cap_options(forced_cmd, caps);

    CLI::App* freq_cmd = app.add_subcommand("freq", "Appearance frequency of one tile");
    freq_cmd->add_option("perm", perm_text)->required();
    freq_cmd->add_option("--tile", tile_text, "Tile label, e.g. 1,5")->required();
    freq_cmd->add_option("--type", type_name, "left|right|top|bottom")->required();
    freq_cmd->add_flag("--json", as_json);
    add_cap_options(freq_cmd, caps);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Exhaustively check a statement against brute force");
    verify_cmd->add_option("name", verify_name, "force-right|force-left|force-top|force-bottom|"
                                                "right-at-top|hexagon|labels|tau|optimal-char|catalan")
        ->required();
    verify_cmd->add_option("--n", verify_n, "Check every fully supported w in S_n");
    verify_cmd->add_option("--m", verify_m, "Half-size (catalan and optimal-char)");
    verify_cmd->add_option("--threads", threads, "Worker threads (default: hardware)");
    add_cap_options(verify_cmd, caps);

    CLI::App* optimal_cmd =
        app.add_subcommand("optimal", "Permutations with maximally many forced right tiles");
    optimal_cmd->add_option("--m", m, "Half-size: witnesses live in S_{2m}")->required();
    optimal_cmd->add_flag("--list", list);
    optimal_cmd->add_flag("--json", as_json);

    CLI::App* phi_cmd = app.add_subcommand("phi", "Apply the size-raising bijection");
    phi_cmd->add_option("perm", perm_text)->required();
    phi_cmd->add_flag("--inverse", inverse_map, "Apply the inverse map");
    phi_cmd->add_flag("--json", as_json);

    CLI::App* render_cmd = app.add_subcommand("render", "Write an SVG picture of tilings");
    render_cmd->add_option("perm", perm_text)->required();
    CLI::Option* index_opt =
        render_cmd->add_option("--tiling", tiling_index, "1-based tiling index (default 1)");
    render_cmd->add_flag("--all", all, "Render every tiling side by side")->excludes(index_opt);
    render_cmd->add_option("--out", out_path, "Output SVG path")->required();
    render_cmd->add_flag("--shade-forced", shade, "Fill forced tiles 20% black");
    render_cmd->add_flag("--integer-geometry", integer_geometry,
                         "Draw the exact integer embedding instead of unit sides");
    render_cmd->add_option("--scale", scale, "Pixels per unit edge")
        ->check(CLI::PositiveNumber);
    add_cap_options(render_cmd, caps);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (tilings_cmd->parsed()) cmd_tilings(out, perm_text, list, as_json, caps);
        else if (forced_cmd->parsed()) cmd_forced(out, perm_text, type_name, as_json, caps);
        else if (freq_cmd->parsed()) cmd_freq(out, perm_text, tile_text, type_name, as_json, caps);
        else if (verify_cmd->parsed()) cmd_verify(out, verify_name, verify_n, verify_m, threads, caps);
        else if (optimal_cmd->parsed()) cmd_optimal(out, m, list, as_json);
        else if (phi_cmd->parsed()) cmd_phi(out, perm_text, inverse_map, as_json);
        else if (render_cmd->parsed()) {
            RenderOptions options;
            options.equilateral = !integer_geometry;
            options.shade_forced = shade;
            options.scale = scale;
            cmd_render(out, perm_text, tiling_index, all, out_path, options, caps);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        emit(err, json{{"error", json{{"code", error_code_name(e.code())},
                                      {"message", e.what()}}}});
        return 1;
    }
}

} // namespace elnitsky::cli
