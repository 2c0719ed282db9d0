#include "idealsync/dfa.hpp"

#include <algorithm>
#include <optional>

#include "idealsync/errors.hpp"

namespace idealsync {

Dfa::Dfa(Alphabet alphabet, std::size_t num_states, std::vector<State> delta,
         std::vector<std::string> labels)
    : alphabet_(alphabet),
      num_states_(num_states),
      delta_(std::move(delta)),
      labels_(std::move(labels)) {
    if (num_states_ == 0) throw InputError("automaton needs at least one state");
    if (delta_.size() != num_states_ * alphabet_.size()) {
        throw InputError("transition table has " + std::to_string(delta_.size()) +
                         " entries, expected " + std::to_string(num_states_ * alphabet_.size()));
    }
    for (State t : delta_) {
        if (t >= num_states_) {
            throw InputError("transition target " + std::to_string(t) + " outside 0.." +
                             std::to_string(num_states_ - 1));
        }
    }
    if (!labels_.empty() && labels_.size() != num_states_) {
        throw InputError("label count " + std::to_string(labels_.size()) +
                         " does not match state count " + std::to_string(num_states_));
    }
}

State Dfa::next(State q, Letter x) const {
    if (q >= num_states_) {
        throw InputError("state " + std::to_string(q) + " outside 0.." +
                         std::to_string(num_states_ - 1));
    }
    if (!alphabet_.contains(x)) {
        throw InputError("letter index " + std::to_string(x) + " outside alphabet of size " +
                         std::to_string(alphabet_.size()));
    }
    return delta_[q * alphabet_.size() + x];
}

const std::string& Dfa::label(State q) const {
    if (!has_labels()) throw InputError("automaton has no labels");
    if (q >= num_states_) throw InputError("state " + std::to_string(q) + " out of range");
    return labels_[q];
}

std::string Dfa::display_label(State q) const {
    if (has_labels()) return label(q);
    if (q >= num_states_) throw InputError("state " + std::to_string(q) + " out of range");
    return std::to_string(q);
}

bool Dfa::same_table(const Dfa& other) const {
    return alphabet_ == other.alphabet_ && num_states_ == other.num_states_ &&
           delta_ == other.delta_;
}

State apply(const Dfa& a, State q, const Word& w) {
    State cur = q;
    for (Letter x : w.letters()) cur = a.next(cur, x);
    return cur;
}

StateSet image_letter(const Dfa& a, const StateSet& p, Letter x) {
    StateSet out(a.num_states());
    p.for_each([&](State q) { out.set(a.next(q, x)); });
    return out;
}

StateSet image(const Dfa& a, const StateSet& p, const Word& w) {
    if (p.universe_size() != a.num_states()) {
        throw InputError("state set universe does not match automaton");
    }
    StateSet cur = p;
    for (Letter x : w.letters()) cur = image_letter(a, cur, x);
    return cur;
}

namespace {

// Reachability over the transition digraph, optionally on reversed edges.
std::vector<bool> reachable(const Dfa& a, State root, bool reverse) {
    const std::size_t n = a.num_states();
    const std::size_t m = a.alphabet().size();
    std::vector<std::vector<State>> radj;
    if (reverse) {
        radj.assign(n, {});
        for (State q = 0; q < n; ++q)
            for (Letter x = 0; x < m; ++x) radj[a.next(q, static_cast<Letter>(x))].push_back(q);
    }
    std::vector<bool> seen(n, false);
    std::vector<State> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        if (reverse) {
            for (State r : radj[q]) {
                if (!seen[r]) {
                    seen[r] = true;
                    stack.push_back(r);
                }
            }
        } else {
            for (Letter x = 0; x < m; ++x) {
                const State r = a.next(q, static_cast<Letter>(x));
                if (!seen[r]) {
                    seen[r] = true;
                    stack.push_back(r);
                }
            }
        }
    }
    return seen;
}

} // namespace

bool is_strongly_connected(const Dfa& a) {
    const auto fwd = reachable(a, 0, false);
    if (std::find(fwd.begin(), fwd.end(), false) != fwd.end()) return false;
    const auto bwd = reachable(a, 0, true);
    return std::find(bwd.begin(), bwd.end(), false) == bwd.end();
}

std::vector<State> bfs_order(const Dfa& a, State root) {
    const std::size_t n = a.num_states();
    const std::size_t m = a.alphabet().size();
    std::vector<State> order;
    order.reserve(n);
    std::vector<bool> seen(n, false);
    order.push_back(root);
    seen[root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        const State q = order[head];
        for (Letter x = 0; x < m; ++x) {
            const State r = a.next(q, static_cast<Letter>(x));
            if (!seen[r]) {
                seen[r] = true;
                order.push_back(r);
            }
        }
    }
    return order;
}

namespace {

// Relabeled table under the BFS numbering from `root`; requires the BFS to
// cover every state.
std::vector<State> rooted_table(const Dfa& a, State root) {
    const std::size_t n = a.num_states();
    const std::size_t m = a.alphabet().size();
    const auto order = bfs_order(a, root);
    std::vector<State> id(n);
    for (std::size_t i = 0; i < order.size(); ++i) id[order[i]] = static_cast<State>(i);
    std::vector<State> table(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        const State q = order[i];
        for (Letter x = 0; x < m; ++x) {
            table[i * m + x] = id[a.next(q, static_cast<Letter>(x))];
        }
    }
    return table;
}

} // namespace

std::vector<State> canonical_table(const Dfa& a) {
    if (!is_strongly_connected(a)) {
        throw InputError("canonical_table requires a strongly connected automaton");
    }
    std::optional<std::vector<State>> best;
    for (State root = 0; root < a.num_states(); ++root) {
        auto t = rooted_table(a, root);
        if (!best || t < *best) best = std::move(t);
    }
    return *best;
}

namespace {

// Backtracking bijection search used when either automaton is not strongly
// connected. Assignments propagate through the deterministic transitions, so
// only one seed per unreached region is ever chosen freely.
bool extend_isomorphism(const Dfa& a, const Dfa& b, std::vector<std::optional<State>>& map,
                        std::vector<bool>& used) {
    const std::size_t n = a.num_states();
    const std::size_t m = a.alphabet().size();

    State q0 = static_cast<State>(n);
    for (State q = 0; q < n; ++q) {
        if (!map[q]) {
            q0 = q;
            break;
        }
    }
    if (q0 == static_cast<State>(n)) return true;

    for (State r0 = 0; r0 < n; ++r0) {
        if (used[r0]) continue;
        std::vector<std::pair<State, State>> assigned;
        std::vector<std::pair<State, State>> frontier{{q0, r0}};
        bool ok = true;
        while (ok && !frontier.empty()) {
            auto [q, r] = frontier.back();
            frontier.pop_back();
            if (map[q]) {
                if (*map[q] != r) ok = false;
                continue;
            }
            if (used[r]) {
                ok = false;
                continue;
            }
            map[q] = r;
            used[r] = true;
            assigned.emplace_back(q, r);
            for (Letter x = 0; x < m; ++x) {
                frontier.emplace_back(a.next(q, static_cast<Letter>(x)),
                                      b.next(r, static_cast<Letter>(x)));
            }
        }
        if (ok && extend_isomorphism(a, b, map, used)) return true;
        for (auto [q, r] : assigned) {
            map[q] = std::nullopt;
            used[r] = false;
        }
    }
    return false;
}

} // namespace

bool are_isomorphic(const Dfa& a, const Dfa& b) {
    if (a.alphabet() != b.alphabet() || a.num_states() != b.num_states()) return false;
    const bool sa = is_strongly_connected(a);
    const bool sb = is_strongly_connected(b);
    if (sa != sb) return false;
    if (sa) return canonical_table(a) == canonical_table(b);
    std::vector<std::optional<State>> map(a.num_states());
    std::vector<bool> used(a.num_states(), false);
    return extend_isomorphism(a, b, map, used);
}

} // namespace idealsync
