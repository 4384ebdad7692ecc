#ifndef ELNITSKY_WORDS_HPP
#define ELNITSKY_WORDS_HPP

#include <cstddef>
#include <vector>

#include "elnitsky/perm.hpp"

namespace elnitsky {

/// A word in the simple reflections: letters are generator indices in
/// {1..n-1}. Words act on the identity by right multiplication; letter k
/// swaps the entries at positions k and k+1.
using Word = std::vector<int>;

inline constexpr std::size_t kDefaultMaxWords = 10'000'000;
inline constexpr std::size_t kDefaultMaxTilings = 1'000'000;

Permutation evaluate(const Word& word, int n);

/// True iff the word's length equals the inversion count of its evaluation.
bool is_reduced(const Word& word, int n);

/// All reduced words of w, sorted lexicographically. Descent recursion:
/// every reduced word of w is a reduced word of w*s_k followed by k, for a
/// descent k of w.
std::vector<Word> reduced_words(const Permutation& w,
                                std::size_t max_words = kDefaultMaxWords);

/// Lexicographically least word reachable from `word` by swapping adjacent
/// letters a, b with |a-b| >= 2.
Word canonical_form(const Word& word);

/// One commutation class of reduced words, keyed by its canonical word.
struct CommutationClass {
    Word canonical;

    friend bool operator==(const CommutationClass&, const CommutationClass&) = default;
    friend auto operator<=>(const CommutationClass& a, const CommutationClass& b) {
        return a.canonical <=> b.canonical;
    }
};

/// Partition of the given words (all of one permutation) into commutation
/// classes, sorted by canonical word.
std::vector<CommutationClass> commutation_classes(const std::vector<Word>& words);

/// Number of words in the class, by breadth-first closure under commutation
/// swaps.
std::size_t class_size(const CommutationClass& cls,
                       std::size_t max_words = kDefaultMaxWords);

/// Generators that can begin (resp. end) some word of the class, ascending.
std::vector<int> initial_letters(const CommutationClass& cls);
std::vector<int> final_letters(const CommutationClass& cls);

/// The class of reversed words, a commutation class of w^{-1}. Reversal of
/// reduced words is the combinatorial form of the left-right reflection
/// between tilings of X(w) and X(w^{-1}).
CommutationClass reverse_class(const CommutationClass& cls, const Permutation& w);

} // namespace elnitsky

#endif
