#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "elnitsky/words.hpp"
#include "test_helpers.hpp"

using namespace elnitsky;
using testing::perm;
using testing::symmetric_group;

namespace {

// Front-first enumeration: the first letter of a reduced word is a left
// descent. Independent of the library's back-first descent recursion.
void front_first(const Permutation& u, Word& prefix, std::vector<Word>& out) {
    bool any = false;
    for (int k = 1; k < u.size(); ++k) {
        if (u.position_of(k) > u.position_of(k + 1)) {
            any = true;
            prefix.push_back(k);
            // Left multiplication by s_k swaps the values k and k+1.
            std::vector<int> e = u.entries();
            for (int& v : e) {
                if (v == k) v = k + 1;
                else if (v == k + 1) v = k;
            }
            front_first(Permutation(std::move(e)), prefix, out);
            prefix.pop_back();
        }
    }
    if (!any) out.push_back(prefix);
}

std::vector<Word> front_first_words(const Permutation& w) {
    std::vector<Word> out;
    Word prefix;
    front_first(w, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Full commutation class by breadth-first closure over adjacent swaps of
// letters at distance >= 2.
std::set<Word> class_members(const Word& start) {
    std::set<Word> seen{start};
    std::vector<Word> frontier{start};
    while (!frontier.empty()) {
        Word cur = std::move(frontier.back());
        frontier.pop_back();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (std::abs(cur[i] - cur[i + 1]) < 2) continue;
            Word next = cur;
            std::swap(next[i], next[i + 1]);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return seen;
}

} // namespace

TEST_CASE("evaluate") {
    CHECK(evaluate({1, 2, 1}, 3) == perm({3, 2, 1}));
    CHECK(evaluate({}, 4) == Permutation::identity(4));
    CHECK_THROWS_AS(evaluate({3}, 3), Error);
    CHECK_THROWS_AS(evaluate({0}, 3), Error);

    // A 7-letter word whose evaluation has 7 inversions is reduced.
    const Permutation w = evaluate({2, 1, 3, 2, 4, 1, 3}, 5);
    CHECK(inversion_pairs(w).size() == 7);
    CHECK(is_reduced({2, 1, 3, 2, 4, 1, 3}, 5));
    CHECK_FALSE(is_reduced({1, 1}, 3));
}

TEST_CASE("reduced words of small permutations") {
    CHECK(reduced_words(perm({3, 2, 1})) == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
    CHECK(reduced_words(perm({2, 1})) == std::vector<Word>{{1}});
    CHECK(reduced_words(Permutation::identity(3)) == std::vector<Word>{{}});
}

TEST_CASE("every reduced word has length = inversion count; two routes agree") {
    for (int n = 1; n <= 5; ++n)
        for (const Permutation& w : symmetric_group(n)) {
            const std::vector<Word> words = reduced_words(w);
            const std::size_t length = inversion_pairs(w).size();
            for (const Word& word : words) {
                CHECK(word.size() == length);
                CHECK(evaluate(word, n) == w);
            }
            CHECK(words == front_first_words(w));
        }
}

TEST_CASE("word cap") {
    CHECK_THROWS_AS(reduced_words(perm({3, 2, 1}), 1), Error);
    try {
        reduced_words(perm({3, 2, 1}), 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SizeLimitExceeded);
    }
}

TEST_CASE("canonical form examples") {
    CHECK(canonical_form({3, 1}) == Word{1, 3});
    CHECK(canonical_form({1, 2, 1}) == Word{1, 2, 1});
    CHECK(canonical_form({2, 1, 3}) == Word{2, 1, 3});
    CHECK(canonical_form({}) == Word{});
}

TEST_CASE("canonical form is the lex-least class member and is class-constant") {
    for (int n = 2; n <= 5; ++n)
        for (const Permutation& w : symmetric_group(n))
            for (const Word& word : reduced_words(w)) {
                const std::set<Word> members = class_members(word);
                const Word canon = canonical_form(word);
                CHECK(canon == *members.begin());
                CHECK(canonical_form(canon) == canon);
                for (const Word& other : members) CHECK(canonical_form(other) == canon);
            }
}

TEST_CASE("commutation classes") {
    CHECK(commutation_classes(reduced_words(perm({3, 2, 1}))).size() == 2);
    CHECK(commutation_classes(reduced_words(perm({3, 4, 2, 5, 1}))).size() == 3);
    CHECK(commutation_classes(reduced_words(perm({3, 6, 1, 4, 7, 2, 5}))).size() == 2);
    CHECK_THROWS_AS(commutation_classes({{1}, {2}}), Error);
    CHECK(commutation_classes({}).empty());
}

TEST_CASE("class sizes partition the reduced words") {
    for (const Permutation& w :
         {perm({3, 4, 2, 5, 1}), perm({3, 2, 1}), perm({4, 3, 2, 1})}) {
        const std::vector<Word> words = reduced_words(w);
        std::size_t total = 0;
        for (const CommutationClass& cls : commutation_classes(words))
            total += class_size(cls);
        CHECK(total == words.size());
    }
}

TEST_CASE("initial and final letters") {
    CHECK(initial_letters(CommutationClass{{1, 2, 1}}) == std::vector<int>{1});
    CHECK(final_letters(CommutationClass{{1, 2, 1}}) == std::vector<int>{1});
    CHECK(initial_letters(CommutationClass{{1, 3}}) == std::vector<int>{1, 3});
    CHECK(final_letters(CommutationClass{{1, 3}}) == std::vector<int>{1, 3});

    // k is a final letter exactly when some member of the class ends in k.
    for (int n = 2; n <= 5; ++n)
        for (const Permutation& w : symmetric_group(n))
            for (const CommutationClass& cls : commutation_classes(reduced_words(w))) {
                std::set<int> first, last;
                for (const Word& member : class_members(cls.canonical)) {
                    if (member.empty()) continue;
                    first.insert(member.front());
                    last.insert(member.back());
                }
                CHECK(initial_letters(cls) == std::vector<int>(first.begin(), first.end()));
                CHECK(final_letters(cls) == std::vector<int>(last.begin(), last.end()));
            }
}

TEST_CASE("reverse_class implements the reflection onto the inverse") {
    const Permutation w21 = perm({2, 1});
    CHECK(reverse_class(CommutationClass{{1}}, w21).canonical == Word{1});

    const Permutation w = perm({3, 4, 2, 5, 1});
    const Permutation w_inv = inverse(w);
    std::set<Word> images;
    for (const CommutationClass& cls : commutation_classes(reduced_words(w))) {
        const CommutationClass image = reverse_class(cls, w);
        CHECK(evaluate(image.canonical, 5) == w_inv);
        CHECK(reverse_class(image, w_inv) == cls);
        images.insert(image.canonical);
    }
    CHECK(images.size() == 3);

    CHECK_THROWS_AS(reverse_class(CommutationClass{{1}}, perm({1, 2})), Error);

    for (int n = 2; n <= 5; ++n)
        for (const Permutation& v : symmetric_group(n))
            for (const CommutationClass& cls : commutation_classes(reduced_words(v)))
                CHECK(reverse_class(reverse_class(cls, v), inverse(v)) == cls);
}
