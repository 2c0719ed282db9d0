#ifndef IDEALSYNC_CONSTRUCTIONS_HPP
#define IDEALSYNC_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "idealsync/dfa.hpp"
#include "idealsync/languages.hpp"
#include "idealsync/word.hpp"

namespace idealsync {

/// De Bruijn automaton for words of length n: states are the binary words
/// of length n and xs steps to sy on letter y. Its synchronizing language
/// is exactly the words of length >= n. For alphabets with more than two
/// letters, every letter beyond 'b' acts like 'a', which keeps the
/// synchronizing language at Sigma^>=n over the full alphabet.
Dfa build_de_bruijn(unsigned n, const Alphabet& alphabet);

/// Modified De Bruijn automaton B_U for a set U of binary words of uniform
/// length n, U a proper nonempty subset of Sigma^n. Viewing states as pairs
/// (x, u): a transition producing uy in U keeps the De Bruijn step
/// (x,u) -> (z,v) with uy = zv; a transition producing uy outside
/// U u {a^n, b^n} steps to (x, v) instead; and when a^n (resp. b^n) is not
/// in U, the single transition from (a, a^{n-1}) on a is redirected to
/// (b, a^{n-1}) (resp. symmetrically), all other transitions keeping the
/// De Bruijn step. B_U is strongly connected with 2^n states and its
/// synchronizing language is Sigma* U Sigma*.
Dfa build_b_u(const GeneratorSet& u, unsigned n);

/// The words of length n that contain some generator as a factor.
/// Requires n to be at least the maximum generator length.
std::vector<Word> lift_generators(const GeneratorSet& s, unsigned n);

/// w = u s v with s a generator and the suffix sv containing no occurrence
/// of any generator other than its prefix s.
struct Factorization {
    Word u;
    Word s;
    Word v;
};

/// The unique factorization above, computed from the generator occurrence
/// with the rightmost end position; anti-factoriality of S makes that
/// occurrence unique and the uniqueness is re-checked by a full scan.
Factorization canonical_factorization(const Word& w, const GeneratorSet& s);

/// Quotient construction C_S for a finite anti-factorial set S of binary
/// words: builds B_T for the lift T of S to length n = max |s|, merges the
/// states u s v sharing the same canonical suffix sv (checking that the
/// merge relation is a congruence), and returns the quotient. At most 2^n
/// states, strongly connected, synchronizing language Sigma* S Sigma*.
Dfa build_c_s(const GeneratorSet& s);

/// Longest word that is simultaneously a prefix of x and a suffix of y.
Word overlap(const Word& x, const Word& y);

/// Word automaton with the sink removed and the transition from the
/// longest proper prefix on the final letter deleted. Exactly one
/// (state, letter) slot is undefined; build_d_uv fills it with a cross
/// link into the other component.
struct PrunedWordAutomaton {
    Alphabet alphabet;
    std::size_t num_states = 0;
    std::vector<std::optional<State>> delta; // row-major, one hole
    std::vector<std::string> labels;

    std::optional<State> next(State q, Letter x) const {
        return delta[q * alphabet.size() + x];
    }
};

PrunedWordAutomaton build_pruned_word_automaton(const Word& w, const Alphabet& alphabet);

/// Strong connectivity of the defined transitions of a pruned automaton.
bool is_strongly_connected(const PrunedWordAutomaton& a);

/// Two-word gluing D_{u,v}: the pruned automata of u and v joined by cross
/// links u[1..n-1] -> s on u[n] and v[1..m-1] -> p on v[m], where s is the
/// longest prefix of v that is a suffix of u and p the longest prefix of u
/// that is a suffix of v. For anti-factorial {u, v} outside the excluded
/// shapes, D_{u,v} has |u|+|v| states, is strongly connected, and its
/// synchronizing language is Sigma*(u+v)Sigma*.
///
/// The construction is proven for the binary alphabet. Passing
/// allow_general_alphabet builds the same gluing over a larger alphabet and
/// then verifies the synchronizing language against the ideal, throwing if
/// the check fails.
Dfa build_d_uv(const Word& u, const Word& v, const Alphabet& alphabet,
               bool allow_general_alphabet = false);

} // namespace idealsync

#endif
