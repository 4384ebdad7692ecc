#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "elnitsky/cli.hpp"
#include "elnitsky/words.hpp"

using namespace elnitsky;
using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

// Minimal well-formedness check: every opened tag is closed in order.
bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = text.find('<', pos)) != std::string::npos) {
        const std::size_t end = text.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.empty()) return false;
        if (tag.front() == '?') continue;
        if (tag.back() == '/') continue;
        if (tag.front() == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
        } else {
            stack.push_back(tag.substr(0, tag.find_first_of(" \t\n")));
        }
    }
    return stack.empty();
}

} // namespace

TEST_CASE("permutation argument parsing") {
    const Permutation expected(std::vector<int>{3, 4, 2, 5, 1});
    CHECK(cli::parse_permutation("34251") == expected);
    CHECK(cli::parse_permutation("3,4,2,5,1") == expected);
    CHECK(cli::parse_permutation("10,2,3,4,5,6,7,8,9,1").size() == 10);
    CHECK_THROWS(cli::parse_permutation("12345678910"));
    CHECK_THROWS_AS(cli::parse_permutation("2,2,1"), Error);
}

TEST_CASE("tilings command") {
    CHECK(run_cli({"tilings", "321"}).out == "2\n");
    CHECK(run_cli({"tilings", "321", "--count"}).out == "2\n");
    CHECK(run_cli({"tilings", "3,2,1"}).out == "2\n");

    const Result listed = run_cli({"tilings", "34251", "--list", "--json"});
    REQUIRE(listed.code == 0);
    const json doc = json::parse(listed.out);
    CHECK(doc["count"] == 3);
    CHECK(doc["perm"] == json::array({3, 4, 2, 5, 1}));
    REQUIRE(doc["tilings"].size() == 3);
    CHECK(doc["tilings"][0]["word"] == json::array({1, 2, 1, 3, 2, 4}));
    CHECK(doc["tilings"][0]["tiles"].size() == 6);
    // Class sizes refine the reduced word count.
    std::size_t words = 0;
    for (const auto& entry : doc["tilings"]) words += entry["word_count"].get<std::size_t>();
    CHECK(words == reduced_words(Permutation(std::vector<int>{3, 4, 2, 5, 1})).size());
}

TEST_CASE("forced command json matches the worked example") {
    const Result result = run_cli({"forced", "34251", "--json"});
    REQUIRE(result.code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["tiling_count"] == 3);
    CHECK(doc["forced"]["right"] == json::array({json::array({1, 5})}));
    CHECK(doc["forced"]["bottom"] == json::array({json::array({1, 5})}));
    CHECK(doc["forced"]["left"] == json::array());
    CHECK(doc["forced"]["top"] == json::array());
    for (const auto& entry : doc["frequencies"]["right"])
        if (entry["tile"] == json::array({1, 5}))
            CHECK(entry["frequency"] == json{{"num", 1}, {"den", 1}});

    const Result one_type = run_cli({"forced", "34251", "--type", "right", "--json"});
    const json filtered = json::parse(one_type.out);
    CHECK(filtered["forced"].size() == 1);
    CHECK(filtered["forced"].contains("right"));
}

TEST_CASE("freq command") {
    CHECK(run_cli({"freq", "321", "--tile", "1,3", "--type", "top"}).out == "1/2\n");
    CHECK(run_cli({"freq", "34251", "--tile", "1,5", "--type", "right"}).out == "1\n");
    // The label is unordered.
    CHECK(run_cli({"freq", "34251", "--tile", "5,1", "--type", "right"}).out == "1\n");
    CHECK(run_cli({"freq", "34251", "--tile", "2,5", "--type", "right"}).out == "0\n");
    const Result as_json =
        run_cli({"freq", "321", "--tile", "1,3", "--type", "top", "--json"});
    CHECK(json::parse(as_json.out)["frequency"] == json{{"num", 1}, {"den", 2}});
    CHECK(run_cli({"freq", "321", "--tile", "1,3", "--type", "sideways"}).code == 2);
    CHECK(run_cli({"freq", "321", "--tile", "1", "--type", "top"}).code == 2);
}

TEST_CASE("verify command") {
    const Result result = run_cli({"verify", "force-right", "--n", "5"});
    REQUIRE(result.code == 0);
    const json doc = json::parse(result.out);
    CHECK(doc["theorem"] == "force-right");
    CHECK(doc["n"] == 5);
    CHECK(doc["checked"] == 71);
    CHECK(doc["counterexamples"] == json::array());

    const json catalan_doc =
        json::parse(run_cli({"verify", "catalan", "--m", "4"}).out);
    CHECK(catalan_doc["m"] == 4);
    CHECK(catalan_doc["counterexamples"] == json::array());

    CHECK(run_cli({"verify", "force-right"}).code == 2);
    CHECK(run_cli({"verify", "force-right", "--n", "4", "--m", "2"}).code == 2);
    CHECK(run_cli({"verify", "nonsense", "--n", "4"}).code == 1);
}

TEST_CASE("optimal and phi commands") {
    CHECK(run_cli({"optimal", "--m", "4", "--list"}).out ==
          "31527486\n31627485\n41527386\n41627385\n51627384\n");
    CHECK(run_cli({"optimal", "--m", "4"}).out == "5\n");
    const json doc = json::parse(run_cli({"optimal", "--m", "2", "--json", "--list"}).out);
    CHECK(doc["count"] == 1);
    CHECK(doc["witnesses"] == json::array({json::array({3, 1, 4, 2})}));

    CHECK(run_cli({"phi", "214365"}).out == "31527486\n");
    CHECK(run_cli({"phi", "31527486", "--inverse"}).out == "214365\n");
    CHECK(run_cli({"phi", "1234"}).code == 1);
}

TEST_CASE("byte-identical output across invocations") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"forced", "34251", "--json"},
          std::vector<std::string>{"tilings", "3614725", "--list", "--json"},
          std::vector<std::string>{"verify", "tau", "--n", "4"}}) {
        const Result first = run_cli(args);
        const Result second = run_cli(args);
        CHECK(first.code == 0);
        CHECK(first.out == second.out);
    }
}

TEST_CASE("error mapping and exit codes") {
    const Result domain = run_cli({"forced", "2134"});
    CHECK(domain.code == 1);
    CHECK(domain.out.empty());
    const json err = json::parse(domain.err);
    CHECK(err["error"]["code"] == "NotFullySupported");

    CHECK(run_cli({"tilings", "2,2,1"}).code == 1);
    CHECK(run_cli({"tilings", "banana"}).code == 2);
    CHECK(run_cli({"tilings"}).code == 2);
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);

    const Result capped = run_cli({"tilings", "321", "--max-tilings", "1"});
    CHECK(capped.code == 1);
    CHECK(json::parse(capped.err)["error"]["code"] == "SizeLimitExceeded");
}

TEST_CASE("tiling cap from the environment") {
    setenv("ELNITSKY_MAX_TILINGS", "1", 1);
    CHECK(run_cli({"tilings", "321"}).code == 1);
    // An explicit flag wins over the environment.
    CHECK(run_cli({"tilings", "321", "--max-tilings", "10"}).code == 0);
    unsetenv("ELNITSKY_MAX_TILINGS");
    CHECK(run_cli({"tilings", "321"}).code == 0);
}

TEST_CASE("render command writes structurally sound SVG") {
    const std::string path21 = "test_render_21.svg";
    const Result single = run_cli({"render", "21", "--out", path21});
    REQUIRE(single.code == 0);
    std::ifstream file(path21);
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string svg = buffer.str();
    CHECK(xml_well_formed(svg));
    CHECK(count_occurrences(svg, "<polygon") == 1);
    CHECK(count_occurrences(svg, "<circle") == 2);
    std::remove(path21.c_str());

    // Shading marks exactly the forced {1,5} tile in each tiling of 34251.
    const std::string path34251 = "test_render_34251.svg";
    const Result shaded =
        run_cli({"render", "34251", "--all", "--shade-forced", "--out", path34251});
    REQUIRE(shaded.code == 0);
    std::ifstream file2(path34251);
    std::stringstream buffer2;
    buffer2 << file2.rdbuf();
    const std::string svg2 = buffer2.str();
    CHECK(xml_well_formed(svg2));
    CHECK(count_occurrences(svg2, "<polygon") == 18); // 3 tilings x 6 tiles
    CHECK(count_occurrences(svg2, "fill-opacity") == 3); // one shaded tile each
    std::remove(path34251.c_str());

    const Result indexed = run_cli({"render", "321", "--tiling", "2", "--out", path21});
    CHECK(indexed.code == 0);
    std::remove(path21.c_str());
    CHECK(run_cli({"render", "321", "--tiling", "3", "--out", path21}).code == 2);
    CHECK(run_cli({"render", "321", "--out", "/no/such/dir/out.svg"}).code == 1);

    const Result integer_geo =
        run_cli({"render", "315264", "--integer-geometry", "--scale", "12", "--out", path21});
    CHECK(integer_geo.code == 0);
    std::remove(path21.c_str());
}
