#ifndef IDEALSYNC_RECOGNIZER_HPP
#define IDEALSYNC_RECOGNIZER_HPP

#include <utility>

#include "idealsync/dfa.hpp"
#include "idealsync/errors.hpp"
#include "idealsync/state_set.hpp"

namespace idealsync {

/// A Dfa together with an initial state and accepting set; represents a
/// regular language.
class Recognizer {
public:
    Recognizer(Dfa dfa, State initial, StateSet accepting)
        : dfa_(std::move(dfa)), initial_(initial), accepting_(std::move(accepting)) {
        if (initial_ >= dfa_.num_states()) {
            throw InputError("initial state " + std::to_string(initial_) + " out of range");
        }
        if (accepting_.universe_size() != dfa_.num_states()) {
            throw InputError("accepting set universe does not match state count");
        }
    }

    const Dfa& dfa() const noexcept { return dfa_; }
    State initial() const noexcept { return initial_; }
    const StateSet& accepting() const noexcept { return accepting_; }
    bool is_accepting(State q) const { return accepting_.test(q); }

private:
    Dfa dfa_;
    State initial_;
    StateSet accepting_;
};

} // namespace idealsync

#endif
