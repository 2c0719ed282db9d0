#include "doctest.h"

#include <random>

#include "idealsync/analysis.hpp"
#include "idealsync/constructions.hpp"
#include "idealsync/errors.hpp"
#include "test_helpers.hpp"

using namespace idealsync;
using namespace idealsync::testing;

namespace {

// Shortest accepted word by breadth-first search over the recognizer; an
// oracle for shortest_reset_word via syn_language.
std::optional<std::size_t> shortest_accepted_length(const Recognizer& r) {
    const std::size_t m = r.dfa().alphabet().size();
    std::vector<std::optional<std::size_t>> dist(r.dfa().num_states());
    std::vector<State> queue{r.initial()};
    dist[r.initial()] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const State q = queue[head];
        if (r.is_accepting(q)) return dist[q];
        for (Letter x = 0; x < m; ++x) {
            const State t = r.dfa().next(q, static_cast<Letter>(x));
            if (!dist[t]) {
                dist[t] = *dist[q] + 1;
                queue.push_back(t);
            }
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("syn_language of the De Bruijn automaton is the length filter") {
    const Recognizer syn = syn_language(build_de_bruijn(2, Alphabet(2)));
    CHECK(equivalent(syn, build_ideal_recognizer(GeneratorSet::all_words_of_length(2, Alphabet(2)))));
}

TEST_CASE("syn_language of a permutation automaton is empty") {
    const Dfa identity2(Alphabet(2), 2, {0, 0, 1, 1});
    const Recognizer syn = syn_language(identity2);
    CHECK(equivalent(syn, build_ideal_recognizer(GeneratorSet(Alphabet(2), {}))));
    CHECK_FALSE(is_synchronizing(identity2));
}

TEST_CASE("syn_language of B_U is the generated ideal") {
    const GeneratorSet u = generators("aaa,abb,bab");
    CHECK(equivalent(syn_language(build_b_u(u, 3)), build_ideal_recognizer(u)));
}

TEST_CASE("syn_language accepting set is absorbing and the language an ideal") {
    for (const Dfa& a : {build_de_bruijn(2, Alphabet(2)), build_c_s(generators("aa,aba")),
                         build_d_uv(word("aa"), word("bb"), Alphabet(2))}) {
        const Recognizer syn = syn_language(a);
        syn.accepting().for_each([&](State q) {
            for (Letter x = 0; x < syn.dfa().alphabet().size(); ++x) {
                CHECK(syn.is_accepting(syn.dfa().next(q, static_cast<Letter>(x))));
            }
        });
        for (const Word& w : all_words_up_to(6, a.alphabet())) {
            if (!member(syn, w)) continue;
            CHECK(member(syn, word("ab") + w));
            CHECK(member(syn, w + word("ba")));
        }
    }
}

TEST_CASE("subset cap guards the power construction") {
    // A single constant letter keeps the reachable family tiny, so a
    // raised cap finishes instantly; the default cap refuses up front.
    const std::size_t n = kDefaultSubsetCap + 1;
    std::vector<State> delta(n * 2);
    for (State q = 0; q < n; ++q) {
        delta[q * 2 + 0] = 0;
        delta[q * 2 + 1] = q;
    }
    const Dfa big(Alphabet(2), n, delta);
    CHECK_THROWS_WITH_AS(syn_language(big), doctest::Contains("IDEALSYNC_SUBSET_CAP"),
                         ResourceError);
    CHECK_THROWS_AS(shortest_reset_word(big), ResourceError);
    CHECK(syn_language(big, n).dfa().num_states() == 2); // full set and {0}
    CHECK(shortest_reset_word(big, n) == word("a"));
}

TEST_CASE("is_synchronizing matches the definition on key automata") {
    CHECK(is_synchronizing(build_de_bruijn(3, Alphabet(2))));
    CHECK(is_synchronizing(build_d_uv(word("abaab"), word("babab"), Alphabet(2))));
    CHECK_FALSE(is_synchronizing(Dfa(Alphabet(2), 3, {0, 0, 1, 1, 2, 2})));
    CHECK(is_synchronizing(Dfa(Alphabet(2), 1, {0, 0})));
}

TEST_CASE("pair test and subset test agree on sampled automata") {
    std::mt19937 rng(5);
    std::vector<Dfa> pool{build_de_bruijn(2, Alphabet(2)), build_c_s(generators("aa,aba")),
                          build_b_u(generators("aab"), 3)};
    for (int i = 0; i < 60; ++i) pool.push_back(random_dfa(rng, 1 + i % 10, 2));
    for (const Dfa& a : pool) {
        const Recognizer syn = syn_language(a);
        const bool nonempty = shortest_accepted_length(syn).has_value();
        CHECK(is_synchronizing(a) == nonempty);
        const auto reset = shortest_reset_word(a);
        CHECK(reset.has_value() == nonempty);
        if (reset) {
            CHECK(reset->size() == *shortest_accepted_length(syn));
            CHECK(image(a, StateSet::full(a.num_states()), *reset).count() == 1);
        }
    }
}

TEST_CASE("shortest reset words of the named constructions") {
    CHECK(shortest_reset_word(build_de_bruijn(3, Alphabet(2))) == word("aaa"));
    CHECK(shortest_reset_word(Dfa(Alphabet(2), 1, {0, 0})) == Word());
    CHECK(shortest_reset_word(build_d_uv(word("abaab"), word("babab"), Alphabet(2))) ==
          word("abaab"));
    CHECK(shortest_reset_word(build_c_s(generators("aa,aba"))) == word("aa"));
    // No word shorter than n resets the De Bruijn automaton.
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(shortest_reset_word(build_de_bruijn(n, Alphabet(2)))->size() == n);
    }
}

TEST_CASE("verify_construction reports the theorem facts") {
    const SynReport cs = verify_construction(build_c_s(generators("aa,aba")), generators("aa,aba"));
    CHECK(cs.syn_equals_ideal == true);
    CHECK(cs.strongly_connected);
    CHECK(cs.state_count == 7);

    const SynReport db = verify_construction(build_de_bruijn(2, Alphabet(2)),
                                             GeneratorSet::all_words_of_length(2, Alphabet(2)));
    CHECK(db.syn_equals_ideal == true);
    CHECK(db.state_count == 4);

    // The minimal recognizer of Sigma* aa Sigma*, viewed as a bare
    // automaton, is synchronized by the ideal but has a sink.
    const SynReport sink =
        verify_construction(build_word_automaton(word("aa"), Alphabet(2)).dfa(), generators("aa"));
    CHECK(sink.syn_equals_ideal == true);
    CHECK_FALSE(sink.strongly_connected);
}

TEST_CASE("minimal strongly connected search finds the two-state automaton for Sigma^1") {
    const SearchResult r = min_strongly_connected_search(generators("a,b"), 2);
    REQUIRE(r.found.has_value());
    CHECK(r.found->num_states() == 2);
    CHECK(r.witnesses.size() == 1);
    CHECK(are_isomorphic(*r.found, build_de_bruijn(1, Alphabet(2))));
    CHECK(r.states_searched == 1 + 16);
    CHECK(r.k == 2);
}

TEST_CASE("searches below the witness size report absence") {
    const SearchResult r = min_strongly_connected_search(generators("a,b"), 1);
    CHECK_FALSE(r.found.has_value());
    CHECK(r.witnesses.empty());
    CHECK(r.states_searched == 1);
}

TEST_CASE("reset complexity of the length-two ideal is three") {
    const SearchResult r = reset_complexity_search(generators("aa,ab,ba,bb"), 3);
    REQUIRE(r.found.has_value());
    CHECK(r.found->num_states() == 3);
    CHECK(r.witnesses.size() == 2);
    // Witnesses really do have the requested synchronizing language.
    for (const Dfa& w : r.witnesses) {
        CHECK(equivalent(syn_language(w),
                         build_ideal_recognizer(generators("aa,ab,ba,bb"))));
    }
}

TEST_CASE("reset complexity of a single letter is two") {
    const SearchResult r = reset_complexity_search(generators("a"), 3);
    REQUIRE(r.found.has_value());
    CHECK(r.found->num_states() == 2);
    const Recognizer ideal = build_ideal_recognizer(generators("a"));
    CHECK(minimize(ideal).dfa().num_states() == 2); // rc meets sc here
}

TEST_CASE("search guard refuses infeasible bounds") {
    CHECK_THROWS_AS(min_strongly_connected_search(generators("a,b"), 8), ResourceError);
}

TEST_CASE("searches are deterministic across runs") {
    const SearchResult r1 = min_strongly_connected_search(generators("aa,ab,ba,bb"), 4);
    const SearchResult r2 = min_strongly_connected_search(generators("aa,ab,ba,bb"), 4);
    REQUIRE(r1.found.has_value());
    REQUIRE(r2.found.has_value());
    CHECK(r1.found->transition_table() == r2.found->transition_table());
    CHECK(r1.witnesses.size() == r2.witnesses.size());
    CHECK(r1.states_searched == r2.states_searched);
    for (std::size_t i = 0; i < r1.witnesses.size(); ++i) {
        CHECK(r1.witnesses[i].transition_table() == r2.witnesses[i].transition_table());
    }
}
