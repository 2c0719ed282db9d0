#include "idealsync/analysis.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "idealsync/errors.hpp"

namespace idealsync {

namespace {

void check_subset_cap(const Dfa& a, std::size_t subset_cap) {
    if (a.num_states() > subset_cap) {
        throw ResourceError("subset search over " + std::to_string(a.num_states()) +
                            " states exceeds the cap of " + std::to_string(subset_cap) +
                            " (raise IDEALSYNC_SUBSET_CAP to override)");
    }
}

struct PowerAutomaton {
    std::vector<StateSet> subsets;                // discovery order, 0 = full set
    std::vector<State> delta;                     // row-major
    std::vector<std::pair<State, Letter>> parent; // BFS tree, parent[0] unused
};

PowerAutomaton power_from_full(const Dfa& a) {
    const std::size_t m = a.alphabet().size();
    PowerAutomaton p;
    std::unordered_map<StateSet, State, StateSetHash> index;
    p.subsets.push_back(StateSet::full(a.num_states()));
    index.emplace(p.subsets[0], 0);
    p.parent.emplace_back(0, 0);
    for (std::size_t head = 0; head < p.subsets.size(); ++head) {
        for (Letter x = 0; x < m; ++x) {
            StateSet next = image_letter(a, p.subsets[head], static_cast<Letter>(x));
            auto [it, inserted] = index.emplace(next, static_cast<State>(p.subsets.size()));
            if (inserted) {
                p.subsets.push_back(std::move(next));
                p.parent.emplace_back(static_cast<State>(head), static_cast<Letter>(x));
            }
            p.delta.push_back(it->second);
        }
    }
    return p;
}

Recognizer recognizer_of(const PowerAutomaton& p, const Dfa& a) {
    const std::size_t count = p.subsets.size();
    StateSet accepting(count);
    std::vector<std::string> labels(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (p.subsets[i].count() == 1) accepting.set(static_cast<State>(i));
        std::string label = "{";
        bool first = true;
        p.subsets[i].for_each([&](State q) {
            if (!first) label.push_back(',');
            first = false;
            label += a.display_label(q);
        });
        label.push_back('}');
        labels[i] = std::move(label);
    }
    return Recognizer(Dfa(a.alphabet(), count, p.delta, std::move(labels)), 0, accepting);
}

// The BFS tree path to subset i spells the lexicographically least
// shortest word reaching it.
Word word_to(const PowerAutomaton& p, std::size_t i) {
    std::vector<Letter> letters;
    while (i != 0) {
        letters.push_back(p.parent[i].second);
        i = p.parent[i].first;
    }
    std::reverse(letters.begin(), letters.end());
    return Word(std::move(letters));
}

std::optional<Word> shortest_reset_of(const PowerAutomaton& p) {
    for (std::size_t i = 0; i < p.subsets.size(); ++i) {
        if (p.subsets[i].count() == 1) return word_to(p, i);
    }
    return std::nullopt;
}

} // namespace

Recognizer syn_language(const Dfa& a, std::size_t subset_cap) {
    check_subset_cap(a, subset_cap);
    return recognizer_of(power_from_full(a), a);
}

bool is_synchronizing(const Dfa& a) {
    const std::size_t n = a.num_states();
    if (n == 1) return true;
    const std::size_t m = a.alphabet().size();
    auto pair_id = [n](State p, State q) { return static_cast<std::size_t>(p) * n + q; };

    // Backward closure from the pairs some letter merges directly.
    std::vector<std::vector<std::size_t>> rev(n * n);
    std::vector<bool> mergeable(n * n, false);
    std::vector<std::size_t> queue;
    for (State p = 0; p < n; ++p) {
        for (State q = static_cast<State>(p + 1); q < n; ++q) {
            for (Letter x = 0; x < m; ++x) {
                State tp = a.next(p, static_cast<Letter>(x));
                State tq = a.next(q, static_cast<Letter>(x));
                if (tp == tq) {
                    if (!mergeable[pair_id(p, q)]) {
                        mergeable[pair_id(p, q)] = true;
                        queue.push_back(pair_id(p, q));
                    }
                } else {
                    if (tp > tq) std::swap(tp, tq);
                    rev[pair_id(tp, tq)].push_back(pair_id(p, q));
                }
            }
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t pred : rev[queue[head]]) {
            if (!mergeable[pred]) {
                mergeable[pred] = true;
                queue.push_back(pred);
            }
        }
    }
    for (State p = 0; p < n; ++p) {
        for (State q = static_cast<State>(p + 1); q < n; ++q) {
            if (!mergeable[pair_id(p, q)]) return false;
        }
    }
    return true;
}

std::optional<Word> shortest_reset_word(const Dfa& a, std::size_t subset_cap) {
    check_subset_cap(a, subset_cap);
    const std::size_t m = a.alphabet().size();
    std::unordered_map<StateSet, State, StateSetHash> index;
    PowerAutomaton p;
    p.subsets.push_back(StateSet::full(a.num_states()));
    p.parent.emplace_back(0, 0);
    index.emplace(p.subsets[0], 0);
    if (p.subsets[0].count() == 1) return Word();
    for (std::size_t head = 0; head < p.subsets.size(); ++head) {
        for (Letter x = 0; x < m; ++x) {
            StateSet next = image_letter(a, p.subsets[head], static_cast<Letter>(x));
            auto [it, inserted] = index.emplace(next, static_cast<State>(p.subsets.size()));
            if (!inserted) continue;
            const std::size_t id = p.subsets.size();
            p.parent.emplace_back(static_cast<State>(head), static_cast<Letter>(x));
            const bool single = next.count() == 1;
            p.subsets.push_back(std::move(next));
            if (single) return word_to(p, id);
        }
    }
    return std::nullopt;
}

SynReport analyze(const Dfa& a, std::size_t subset_cap) {
    check_subset_cap(a, subset_cap);
    const PowerAutomaton p = power_from_full(a);
    return SynReport{is_synchronizing(a),
                     is_strongly_connected(a),
                     a.num_states(),
                     shortest_reset_of(p),
                     recognizer_of(p, a),
                     std::nullopt};
}

SynReport verify_construction(const Dfa& a, const GeneratorSet& s, std::size_t subset_cap) {
    SynReport report = analyze(a, subset_cap);
    report.syn_equals_ideal = equivalent(report.syn_recognizer, build_ideal_recognizer(s));
    return report;
}

namespace {

std::uint64_t table_count(std::size_t k, std::size_t m) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k * m; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / k) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= k;
    }
    return total;
}

// Lexicographic minimality over all state relabelings; exactly one
// representative per isomorphism class survives the filter.
bool is_permutation_canonical(const std::vector<State>& table, std::size_t k, std::size_t m,
                              const std::vector<std::vector<State>>& perms) {
    std::vector<State> relabeled(k * m);
    for (const auto& perm : perms) {
        for (std::size_t q = 0; q < k; ++q) {
            for (std::size_t x = 0; x < m; ++x) {
                relabeled[perm[q] * m + x] = perm[table[q * m + x]];
            }
        }
        if (relabeled < table) return false;
    }
    return true;
}

bool table_strongly_connected(const std::vector<State>& table, std::size_t k, std::size_t m) {
    std::vector<bool> seen(k, false);
    std::vector<State> stack{0};
    seen[0] = true;
    std::size_t found = 1;
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (std::size_t x = 0; x < m; ++x) {
            const State r = table[q * m + x];
            if (!seen[r]) {
                seen[r] = true;
                ++found;
                stack.push_back(r);
            }
        }
    }
    if (found != k) return false;

    std::vector<std::vector<State>> radj(k);
    for (std::size_t q = 0; q < k; ++q) {
        for (std::size_t x = 0; x < m; ++x) {
            radj[table[q * m + x]].push_back(static_cast<State>(q));
        }
    }
    std::fill(seen.begin(), seen.end(), false);
    stack.assign(1, 0);
    seen[0] = true;
    found = 1;
    while (!stack.empty()) {
        const State q = stack.back();
        stack.pop_back();
        for (State r : radj[q]) {
            if (!seen[r]) {
                seen[r] = true;
                ++found;
                stack.push_back(r);
            }
        }
    }
    return found == k;
}

// minimize() is canonical, so language equality against an already
// minimized recognizer is plain structural equality.
bool matches_minimized(const Recognizer& r, const Recognizer& minimized_target) {
    const Recognizer m = minimize(r);
    return m.dfa().same_table(minimized_target.dfa()) &&
           m.accepting() == minimized_target.accepting();
}

struct ChunkOutcome {
    std::uint64_t examined = 0;
    std::vector<std::vector<State>> witness_tables;
};

SearchResult exhaustive_search(const GeneratorSet& s, unsigned kmax, bool require_sc,
                               std::uint64_t max_tables) {
    const Alphabet sigma = s.alphabet();
    const std::size_t m = sigma.size();
    for (unsigned k = 1; k <= kmax; ++k) {
        if (table_count(k, m) > max_tables) {
            throw ResourceError("enumerating " + std::to_string(k) + "-state automata needs " +
                                std::to_string(k) + "^" + std::to_string(k * m) +
                                " tables, over the guard of " + std::to_string(max_tables));
        }
    }
    const Recognizer target = minimize(build_ideal_recognizer(s));

    SearchResult result;
    result.k = kmax;
    for (unsigned k = 1; k <= kmax; ++k) {
        std::vector<std::vector<State>> perms;
        {
            std::vector<State> perm(k);
            for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<State>(i);
            while (std::next_permutation(perm.begin(), perm.end())) perms.push_back(perm);
        }

        // Independent chunks over the first table cell, merged in chunk
        // order: the outcome cannot depend on thread scheduling.
        auto run_chunk = [&, k](State first_cell) {
            ChunkOutcome outcome;
            const std::size_t cells = static_cast<std::size_t>(k) * m;
            std::vector<State> table(cells, 0);
            table[0] = first_cell;
            while (true) {
                ++outcome.examined;
                if (is_permutation_canonical(table, k, m, perms) &&
                    (!require_sc || table_strongly_connected(table, k, m))) {
                    Dfa candidate(sigma, k, table);
                    if (matches_minimized(syn_language(candidate), target)) {
                        outcome.witness_tables.push_back(table);
                    }
                }
                std::size_t cell = cells;
                while (cell > 1 && table[cell - 1] == k - 1) table[--cell] = 0;
                if (cell == 1) break; // the first cell belongs to the chunk
                ++table[cell - 1];
            }
            return outcome;
        };

        std::vector<std::future<ChunkOutcome>> futures;
        futures.reserve(k);
        for (State first = 0; first < k; ++first) {
            futures.push_back(std::async(std::launch::async, run_chunk, first));
        }
        std::vector<std::vector<State>> witness_tables;
        for (auto& f : futures) {
            ChunkOutcome outcome = f.get();
            result.states_searched += outcome.examined;
            for (auto& t : outcome.witness_tables) witness_tables.push_back(std::move(t));
        }

        if (!witness_tables.empty()) {
            std::sort(witness_tables.begin(), witness_tables.end());
            for (const auto& t : witness_tables) {
                Dfa witness(sigma, k, t);
                const SynReport check = verify_construction(witness, s);
                if (!check.syn_equals_ideal.value_or(false) ||
                    (require_sc && !check.strongly_connected)) {
                    throw std::logic_error("search witness failed re-verification");
                }
                result.witnesses.push_back(std::move(witness));
            }
            result.found = result.witnesses.front();
            return result;
        }
    }
    return result;
}

} // namespace

SearchResult min_strongly_connected_search(const GeneratorSet& s, unsigned kmax,
                                           std::uint64_t max_tables) {
    return exhaustive_search(s, kmax, /*require_sc=*/true, max_tables);
}

SearchResult reset_complexity_search(const GeneratorSet& s, unsigned kmax,
                                     std::uint64_t max_tables) {
    return exhaustive_search(s, kmax, /*require_sc=*/false, max_tables);
}

} // namespace idealsync
