#include "elnitsky/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace elnitsky {

namespace {

int required_rank(const std::vector<Word>& words) {
    int max_letter = 0;
    for (const Word& w : words)
        for (int a : w) max_letter = std::max(max_letter, a);
    return max_letter + 1;
}

void enumerate_words(const Permutation& u, Word& tail, std::vector<Word>& out,
                     std::size_t max_words) {
    const std::vector<int> ds = descents(u);
    if (ds.empty()) {
        // u is the identity; the collected letters, last first, form a word.
        if (out.size() >= max_words)
            fail(ErrorCode::SizeLimitExceeded,
                 "reduced word enumeration exceeded cap of " + std::to_string(max_words));
        out.emplace_back(tail.rbegin(), tail.rend());
        return;
    }
    for (int k : ds) {
        tail.push_back(k);
        enumerate_words(u.apply_right_swap(k), tail, out, max_words);
        tail.pop_back();
    }
}

} // namespace

Permutation evaluate(const Word& word, int n) {
    if (n < 1) fail(ErrorCode::LetterOutOfRange, "rank must be at least 1");
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    for (int a : word) {
        if (a < 1 || a >= n)
            fail(ErrorCode::LetterOutOfRange,
                 "letter " + std::to_string(a) + " out of range 1.." + std::to_string(n - 1));
        std::swap(e[static_cast<std::size_t>(a - 1)], e[static_cast<std::size_t>(a)]);
    }
    return Permutation(std::move(e));
}

bool is_reduced(const Word& word, int n) {
    return inversion_pairs(evaluate(word, n)).size() == word.size();
}

std::vector<Word> reduced_words(const Permutation& w, std::size_t max_words) {
    std::vector<Word> out;
    Word tail;
    enumerate_words(w, tail, out, max_words);
    std::sort(out.begin(), out.end());
    return out;
}

/*
  Lexicographic normal form of a trace: repeatedly emit the smallest letter
  whose first remaining occurrence is not preceded by a remaining letter
  within distance 1. Letters at distance >= 2 commute, so such an occurrence
  can be bubbled to the front; picking the least available letter at each
  step yields the lex-least word of the class.
*/
Word canonical_form(const Word& word) {
    const std::size_t l = word.size();
    int max_letter = 0;
    for (int a : word) max_letter = std::max(max_letter, a);

    Word out;
    out.reserve(l);
    std::vector<bool> used(l, false);
    std::vector<char> seen(static_cast<std::size_t>(max_letter) + 2, 0);
    for (std::size_t step = 0; step < l; ++step) {
        int best_letter = -1;
        std::size_t best_pos = 0;
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t p = 0; p < l; ++p) {
            if (used[p]) continue;
            const std::size_t a = static_cast<std::size_t>(word[p]);
            if (!seen[a - 1] && !seen[a] && !seen[a + 1] &&
                (best_letter == -1 || word[p] < best_letter)) {
                best_letter = word[p];
                best_pos = p;
            }
            seen[a] = 1;
        }
        used[best_pos] = true;
        out.push_back(best_letter);
    }
    return out;
}

std::vector<CommutationClass> commutation_classes(const std::vector<Word>& words) {
    std::vector<CommutationClass> out;
    if (words.empty()) return out;
    const int n = required_rank(words);
    const Permutation target = evaluate(words.front(), n);
    std::set<Word> canon;
    for (const Word& word : words) {
        if (!(evaluate(word, n) == target))
            fail(ErrorCode::MixedPermutations,
                 "words evaluate to different permutations");
        canon.insert(canonical_form(word));
    }
    out.reserve(canon.size());
    for (const Word& c : canon) out.push_back(CommutationClass{c});
    return out;
}

std::size_t class_size(const CommutationClass& cls, std::size_t max_words) {
    std::set<Word> seen;
    std::vector<Word> frontier{cls.canonical};
    seen.insert(cls.canonical);
    while (!frontier.empty()) {
        const Word cur = std::move(frontier.back());
        frontier.pop_back();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (std::abs(cur[i] - cur[i + 1]) < 2) continue;
            Word next = cur;
            std::swap(next[i], next[i + 1]);
            if (seen.insert(next).second) {
                if (seen.size() > max_words)
                    fail(ErrorCode::SizeLimitExceeded,
                         "class enumeration exceeded cap of " + std::to_string(max_words));
                frontier.push_back(std::move(next));
            }
        }
    }
    return seen.size();
}

namespace {

// Letters whose first occurrence, in the given scan order, has no earlier
// occurrence of a letter within distance 1. These are the letters that can
// be commuted to the scanned-from end of the word.
template <typename Iterator>
std::vector<int> free_letters(Iterator begin, Iterator end) {
    int max_letter = 0;
    for (Iterator it = begin; it != end; ++it) max_letter = std::max(max_letter, *it);
    std::vector<char> seen(static_cast<std::size_t>(max_letter) + 2, 0);
    std::vector<int> out;
    for (Iterator it = begin; it != end; ++it) {
        const std::size_t a = static_cast<std::size_t>(*it);
        if (!seen[a - 1] && !seen[a] && !seen[a + 1]) out.push_back(*it);
        seen[a] = 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<int> initial_letters(const CommutationClass& cls) {
    return free_letters(cls.canonical.begin(), cls.canonical.end());
}

std::vector<int> final_letters(const CommutationClass& cls) {
    return free_letters(cls.canonical.rbegin(), cls.canonical.rend());
}

CommutationClass reverse_class(const CommutationClass& cls, const Permutation& w) {
    if (!(evaluate(cls.canonical, w.size()) == w))
        fail(ErrorCode::ClassPermutationMismatch,
             "class does not belong to " + w.str());
    Word reversed(cls.canonical.rbegin(), cls.canonical.rend());
    return CommutationClass{canonical_form(reversed)};
}

} // namespace elnitsky
