#ifndef IDEALSYNC_LANGUAGES_HPP
#define IDEALSYNC_LANGUAGES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idealsync/recognizer.hpp"
#include "idealsync/word.hpp"

namespace idealsync {

/// Finite set of generator words; the two-sided ideal it generates is
/// Sigma* S Sigma*. Words are deduplicated and kept in length-lexicographic
/// order. An empty generator word is normalized away into the full-language
/// marker, since Sigma* epsilon Sigma* = Sigma*; constructions reject that
/// marker while the recognizer builder maps it to the all-words language.
class GeneratorSet {
public:
    GeneratorSet(Alphabet alphabet, std::vector<Word> words);

    /// Parses a comma-separated list such as "aa,aba". Without an explicit
    /// alphabet, the alphabet is inferred from the letters that occur
    /// (at least binary).
    static GeneratorSet parse(std::string_view csv,
                              std::optional<Alphabet> alphabet = std::nullopt);

    /// All words of the given length: the generator set of Sigma^n.
    static GeneratorSet all_words_of_length(std::size_t n, const Alphabet& alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<Word>& words() const noexcept { return words_; }

    /// True when the empty word was among the generators.
    bool generates_full_language() const noexcept { return full_language_; }
    bool empty() const noexcept { return words_.empty() && !full_language_; }

    std::size_t max_length() const;
    std::size_t min_length() const;
    bool is_anti_factorial() const;
    bool contains(const Word& w) const;

    std::string str() const;

    bool operator==(const GeneratorSet&) const = default;

private:
    Alphabet alphabet_;
    std::vector<Word> words_;
    bool full_language_ = false;
};

/// True iff w = x u y for some words x, y.
bool is_factor(const Word& u, const Word& w);

/// Keeps exactly the words with no proper factor inside the set; the
/// generated ideal is unchanged. The full-language marker passes through.
GeneratorSet anti_factorial_reduce(const GeneratorSet& s);

/// Minimal recognizer of Sigma* w Sigma*, built on the prefixes of w:
/// |w|+1 states, the prefix p steps to the longest prefix of w that is a
/// suffix of p plus the read letter, and the state w is an absorbing sink.
Recognizer build_word_automaton(const Word& w, const Alphabet& alphabet);

/// Recognizer of Sigma* S Sigma*: a failure-function trie over S with one
/// absorbing accepting state, minimized. Empty S yields the empty language;
/// the full-language marker yields the all-words language.
Recognizer build_ideal_recognizer(const GeneratorSet& s);

/// Language-equivalent recognizer with fewest states: unreachable states
/// removed, equivalent states merged, states renumbered in breadth-first
/// order from the initial state so equal languages give identical tables.
Recognizer minimize(const Recognizer& r);

/// Exact language equivalence, decided by minimizing both sides and
/// comparing their canonical forms.
bool equivalent(const Recognizer& r1, const Recognizer& r2);

bool member(const Recognizer& r, const Word& w);

} // namespace idealsync

#endif
