#ifndef IDEALSYNC_DFA_HPP
#define IDEALSYNC_DFA_HPP

#include <string>
#include <vector>

#include "idealsync/alphabet.hpp"
#include "idealsync/state_set.hpp"
#include "idealsync/word.hpp"

namespace idealsync {

/// Complete deterministic transition system <Q, Sigma, delta> with no
/// initial or accepting structure. The table is total by construction and
/// immutable afterwards; per-state display labels are metadata only and
/// never take part in equality or isomorphism.
class Dfa {
public:
    /// `delta` is row-major: delta[q * alphabet.size() + x] is the target
    /// of state q under letter x. `labels` is either empty or one display
    /// string per state.
    Dfa(Alphabet alphabet, std::size_t num_states, std::vector<State> delta,
        std::vector<std::string> labels = {});

    std::size_t num_states() const noexcept { return num_states_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }

    State next(State q, Letter x) const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(State q) const;
    /// The label when present, otherwise the decimal state index.
    std::string display_label(State q) const;

    const std::vector<State>& transition_table() const noexcept { return delta_; }

    /// True when alphabet and transition table coincide exactly
    /// (state-for-state, not merely up to isomorphism). Labels ignored.
    bool same_table(const Dfa& other) const;

private:
    Alphabet alphabet_;
    std::size_t num_states_;
    std::vector<State> delta_;
    std::vector<std::string> labels_;
};

/// Extends delta to words: apply(a, q, epsilon) = q and
/// apply(a, q, wx) = delta(apply(a, q, w), x).
State apply(const Dfa& a, State q, const Word& w);

/// Pointwise image {q . w : q in p}.
StateSet image(const Dfa& a, const StateSet& p, const Word& w);
StateSet image_letter(const Dfa& a, const StateSet& p, Letter x);

/// True iff the underlying digraph (edges q -> delta(q, x)) is one
/// strongly connected component covering every state.
bool is_strongly_connected(const Dfa& a);

/// Breadth-first discovery order from `root`, exploring letters in
/// increasing order. Contains only the states reachable from `root`.
std::vector<State> bfs_order(const Dfa& a, State root);

/// Canonical transition table of a strongly connected automaton: the
/// lexicographically least BFS relabeling over all roots. Two strongly
/// connected automata are isomorphic iff their canonical tables agree.
std::vector<State> canonical_table(const Dfa& a);

/// True iff a state bijection exists that commutes with every letter
/// action (letters are never permuted).
bool are_isomorphic(const Dfa& a, const Dfa& b);

} // namespace idealsync

#endif
