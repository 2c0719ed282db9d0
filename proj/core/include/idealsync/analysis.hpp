#ifndef IDEALSYNC_ANALYSIS_HPP
#define IDEALSYNC_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "idealsync/dfa.hpp"
#include "idealsync/languages.hpp"
#include "idealsync/recognizer.hpp"

namespace idealsync {

/// Automata above this many states are refused by the subset-lattice
/// operations; override per call (the CLI reads IDEALSYNC_SUBSET_CAP).
inline constexpr std::size_t kDefaultSubsetCap = 20;

/// Recognizer of the synchronizing language {w : |Q.w| = 1}: the power
/// automaton started at the full state set, restricted to the subsets
/// reachable from it, accepting exactly the singletons.
Recognizer syn_language(const Dfa& a, std::size_t subset_cap = kDefaultSubsetCap);

/// Pair-automaton test, polynomial in the state count: synchronizing iff
/// every unordered state pair can reach a common state.
bool is_synchronizing(const Dfa& a);

/// A minimum-length synchronizing word, found by breadth-first search over
/// the subset lattice from the full set; ties break lexicographically.
/// Absent when the automaton is not synchronizing.
std::optional<Word> shortest_reset_word(const Dfa& a,
                                        std::size_t subset_cap = kDefaultSubsetCap);

struct SynReport {
    bool is_synchronizing = false;
    bool strongly_connected = false;
    std::size_t state_count = 0;
    std::optional<Word> shortest_reset;
    Recognizer syn_recognizer;
    /// Verdict of syn_language(A) == Sigma* S Sigma*; set by
    /// verify_construction only.
    std::optional<bool> syn_equals_ideal;
};

/// Synchronization facts of one automaton, no ideal comparison.
SynReport analyze(const Dfa& a, std::size_t subset_cap = kDefaultSubsetCap);

/// The acceptance harness for every construction: analyze(a) plus the
/// verdict whether the synchronizing language equals the ideal of s.
SynReport verify_construction(const Dfa& a, const GeneratorSet& s,
                              std::size_t subset_cap = kDefaultSubsetCap);

struct SearchResult {
    /// Smallest witness, absent when none exists within the bound.
    std::optional<Dfa> found;
    /// Every witness at the minimal size, pairwise non-isomorphic, in
    /// canonical table order.
    std::vector<Dfa> witnesses;
    /// Transition tables enumerated over all sizes tried.
    std::uint64_t states_searched = 0;
    /// The bound the search was asked to respect.
    unsigned k = 0;
};

/// Per-size enumeration guard: a size whose table count exceeds this is
/// refused up front.
inline constexpr std::uint64_t kDefaultSearchGuard = std::uint64_t{1} << 20;

/// Exhaustively enumerates complete DFAs with 1..kmax states over the
/// alphabet of s (one canonical representative per isomorphism class),
/// keeping the strongly connected ones whose synchronizing language equals
/// Sigma* S Sigma*. Witnesses are re-verified before they are returned.
SearchResult min_strongly_connected_search(const GeneratorSet& s, unsigned kmax,
                                           std::uint64_t max_tables = kDefaultSearchGuard);

/// Same enumeration without the connectivity requirement: the smallest
/// automaton of any shape whose synchronizing language is the ideal, i.e.
/// the reset complexity of the ideal at desk scale.
SearchResult reset_complexity_search(const GeneratorSet& s, unsigned kmax,
                                     std::uint64_t max_tables = kDefaultSearchGuard);

} // namespace idealsync

#endif
