#ifndef IDEALSYNC_IO_HPP
#define IDEALSYNC_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "idealsync/dfa.hpp"
#include "idealsync/recognizer.hpp"

namespace idealsync {

/// Parsed automaton file. The format is UTF-8 text:
///
///   dfa <num_states> <alphabet-letters>
///   <state-index> <label?> : <target-for-a> <target-for-b> ...
///   ...one row per state...
///   initial <index>                (optional)
///   accepting <index> <index> ...  (optional)
///
/// The presence of an `initial` line makes the file a recognizer.
struct AutomatonFile {
    Dfa dfa;
    std::optional<State> initial;
    std::optional<StateSet> accepting;

    bool is_recognizer() const { return initial.has_value(); }
    Recognizer to_recognizer() const;
};

AutomatonFile parse_automaton(std::string_view text);

std::string render(const Dfa& a);
std::string render(const Recognizer& r);

/// Graphviz text: one node per state (labels when present), parallel edges
/// to the same target merged into a comma-joined label, accepting states
/// double-circled, deterministic ordering throughout.
std::string export_dot(const Dfa& a);
std::string export_dot(const Recognizer& r);

} // namespace idealsync

#endif
