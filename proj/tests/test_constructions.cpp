#include "doctest.h"

#include "idealsync/analysis.hpp"
#include "idealsync/constructions.hpp"
#include "idealsync/errors.hpp"
#include "test_helpers.hpp"

using namespace idealsync;
using namespace idealsync::testing;

namespace {

// All nonempty proper subsets of the binary words of length n, as bitmask.
std::vector<std::vector<Word>> proper_subsets_of_length(unsigned n) {
    const std::size_t count = std::size_t{1} << n;
    std::vector<Word> words;
    for (const Word& w : all_words_up_to(n, Alphabet(2))) {
        if (w.size() == n) words.push_back(w);
    }
    std::vector<std::vector<Word>> subsets;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << count); ++mask) {
        std::vector<Word> subset;
        for (std::size_t i = 0; i < count; ++i) {
            if (mask & (std::size_t{1} << i)) subset.push_back(words[i]);
        }
        subsets.push_back(std::move(subset));
    }
    return subsets;
}

} // namespace

TEST_CASE("de bruijn automaton for n=3 matches its diagram") {
    const Dfa a = build_de_bruijn(3, Alphabet(2));
    REQUIRE(a.num_states() == 8);
    // Figure table: one row per state in label order, a-target then b-target.
    const std::vector<std::pair<const char*, std::pair<const char*, const char*>>> rows{
        {"aaa", {"aaa", "aab"}}, {"aab", {"aba", "abb"}}, {"aba", {"baa", "bab"}},
        {"abb", {"bba", "bbb"}}, {"baa", {"aaa", "aab"}}, {"bab", {"aba", "abb"}},
        {"bba", {"baa", "bab"}}, {"bbb", {"bba", "bbb"}},
    };
    for (State q = 0; q < 8; ++q) {
        CHECK(a.label(q) == rows[q].first);
        CHECK(a.label(a.next(q, 0)) == rows[q].second.first);
        CHECK(a.label(a.next(q, 1)) == rows[q].second.second);
    }
}

TEST_CASE("de bruijn smallest case: both letters are constant maps") {
    const Dfa a = build_de_bruijn(1, Alphabet(2));
    REQUIRE(a.num_states() == 2);
    for (State q = 0; q < 2; ++q) {
        CHECK(a.next(q, 0) == 0);
        CHECK(a.next(q, 1) == 1);
    }
}

TEST_CASE("de bruijn over three letters: the extra letter acts like a") {
    const Dfa a = build_de_bruijn(2, Alphabet(3));
    REQUIRE(a.num_states() == 4);
    for (State q = 0; q < 4; ++q) CHECK(a.next(q, 2) == a.next(q, 0));
    // Synchronizing language is all words of length >= 2 over the full
    // alphabet, checked against the power-automaton ground truth.
    const SynReport report =
        verify_construction(a, GeneratorSet::all_words_of_length(2, Alphabet(3)));
    CHECK(report.strongly_connected);
    CHECK(report.syn_equals_ideal == true);

    CHECK_THROWS_AS(build_de_bruijn(2, Alphabet(1)), InputError);
    CHECK_THROWS_AS(build_de_bruijn(0, Alphabet(2)), InputError);
}

TEST_CASE("de bruijn image law: Q . u is the set of words ending in u") {
    for (unsigned n = 1; n <= 4; ++n) {
        const Dfa a = build_de_bruijn(n, Alphabet(2));
        for (const Word& u : all_words_up_to(n, Alphabet(2))) {
            const StateSet got = image(a, StateSet::full(a.num_states()), u);
            StateSet expected(a.num_states());
            for (State q = 0; q < a.num_states(); ++q) {
                if (is_suffix_of(u, Word::parse(a.label(q), Alphabet(2)))) expected.set(q);
            }
            CHECK(got == expected);
            CHECK(got.count() == (std::size_t{1} << (n - u.size())));
        }
    }
}

TEST_CASE("B_U for U={aaa,abb,bab} matches its diagram") {
    const Dfa a = build_b_u(generators("aaa,abb,bab"), 3);
    REQUIRE(a.num_states() == 8);
    const std::vector<std::pair<const char*, std::pair<const char*, const char*>>> rows{
        {"(a,aa)", {"(a,aa)", "(a,ab)"}}, {"(a,ab)", {"(a,ba)", "(a,bb)"}},
        {"(a,ba)", {"(a,aa)", "(b,ab)"}}, {"(a,bb)", {"(a,ba)", "(b,bb)"}},
        {"(b,aa)", {"(a,aa)", "(b,ab)"}}, {"(b,ab)", {"(b,ba)", "(a,bb)"}},
        {"(b,ba)", {"(b,aa)", "(b,ab)"}}, {"(b,bb)", {"(b,ba)", "(a,bb)"}},
    };
    for (State q = 0; q < 8; ++q) {
        CHECK(a.label(q) == rows[q].first);
        CHECK(a.label(a.next(q, 0)) == rows[q].second.first);
        CHECK(a.label(a.next(q, 1)) == rows[q].second.second);
    }
}

TEST_CASE("B_U input validation") {
    CHECK_THROWS_WITH_AS(build_b_u(generators("aa,ab,ba,bb"), 2),
                         doctest::Contains("De Bruijn"), InputError);
    CHECK_THROWS_AS(build_b_u(GeneratorSet(Alphabet(2), {}), 3), InputError);
    CHECK_THROWS_AS(build_b_u(generators("aa,aba"), 3), InputError); // non-uniform
    CHECK_THROWS_AS(build_b_u(generators("aca", 3), 3), InputError);
    CHECK_THROWS_AS(build_b_u(generators(",aa"), 2), InputError); // epsilon generator
}

TEST_CASE("B_U for U={aaa}: only the b-side extreme transition is redirected") {
    const Dfa a = build_b_u(generators("aaa"), 3);
    // aaa is in U, so (a,aa) keeps its loop under a.
    CHECK(a.next(0, 0) == 0);
    // bbb is not in U: (b,bb) -> b -> (a,bb), while (a,bb) -> b keeps rule (1).
    CHECK(a.label(a.next(7, 1)) == "(a,bb)");
    CHECK(a.label(a.next(3, 1)) == "(b,bb)");

    // Subset images behave as in the connectivity argument.
    const StateSet q_aa = image(a, StateSet::full(8), word("aa"));
    CHECK(q_aa.count() == 2);
    CHECK(a.label(q_aa.elements()[0]) == "(a,aa)");
    CHECK(a.label(q_aa.elements()[1]) == "(b,aa)");
    CHECK(image(a, StateSet::full(8), word("aaa")).count() == 1);
}

TEST_CASE("B_U images stay inside the two-state fibers") {
    for (unsigned n = 2; n <= 3; ++n) {
        for (const auto& subset : proper_subsets_of_length(n)) {
            const Dfa a = build_b_u(GeneratorSet(Alphabet(2), subset), n);
            StateSet covered(a.num_states());
            for (const Word& u : all_words_up_to(n - 1, Alphabet(2))) {
                if (u.size() != n - 1) continue;
                const StateSet q_u = image(a, StateSet::full(a.num_states()), u);
                // Q . u is contained in {(a,u), (b,u)} and the fibers
                // together cover every state.
                StateSet fiber(a.num_states());
                for (State q = 0; q < a.num_states(); ++q) {
                    const std::string& label = a.label(q);
                    if (label.substr(3, label.size() - 4) == u.str()) fiber.set(q);
                }
                CHECK(q_u.is_subset_of(fiber));
                covered |= q_u;
            }
            CHECK(covered == StateSet::full(a.num_states()));
        }
    }
}

TEST_CASE("B_U theorem holds on sampled subsets of length 3") {
    for (const char* csv : {"aaa", "bbb", "aaa,bbb", "aab,bba", "aaa,abb,bab"}) {
        const GeneratorSet u = generators(csv);
        const Dfa a = build_b_u(u, 3);
        CHECK(a.num_states() == 8);
        const SynReport report = verify_construction(a, u);
        CHECK(report.strongly_connected);
        CHECK(report.syn_equals_ideal == true);
    }
}

TEST_CASE("lifting generators to the top length") {
    auto strs = [](const std::vector<Word>& words) {
        std::vector<std::string> out;
        for (const Word& w : words) out.push_back(w.str());
        return out;
    };
    CHECK(strs(lift_generators(generators("aa,aba"), 3)) ==
          std::vector<std::string>{"aaa", "aab", "aba", "baa"});
    CHECK(strs(lift_generators(generators("abaab"), 5)) == std::vector<std::string>{"abaab"});
    CHECK(strs(lift_generators(generators("ab"), 3)) ==
          std::vector<std::string>{"aab", "aba", "abb", "bab"});
    CHECK_THROWS_AS(lift_generators(generators("aa,aba"), 2), InputError);
}

TEST_CASE("canonical factorization picks the rightmost occurrence end") {
    const GeneratorSet s = generators("aa,aba");
    auto check_fact = [&](const char* w, const char* u, const char* mid, const char* v) {
        const Factorization f = canonical_factorization(word(w), s);
        CHECK(f.u == word(u));
        CHECK(f.s == word(mid));
        CHECK(f.v == word(v));
    };
    check_fact("aaa", "a", "aa", "");
    check_fact("baa", "b", "aa", "");
    check_fact("aba", "", "aba", "");
    check_fact("aab", "", "aa", "b");

    CHECK_THROWS_AS(canonical_factorization(word("bbb"), s), InputError);
    CHECK_THROWS_AS(canonical_factorization(word("ab"), generators("a,aba")), InputError);
}

TEST_CASE("canonical factorization is the unique one, by exhaustive scan") {
    for (const char* csv : {"aa,aba", "ab", "b,aa", "aab,bba"}) {
        const GeneratorSet s = generators(csv);
        const unsigned n = static_cast<unsigned>(s.max_length());
        for (const Word& w : lift_generators(s, n)) {
            const Factorization f = canonical_factorization(w, s);
            CHECK(f.u + f.s + f.v == w);
            CHECK(s.contains(f.s));
            // Count the factorizations that satisfy the defining property.
            int valid = 0;
            for (const Word& gen : s.words()) {
                for (std::size_t start = 1; start + gen.size() - 1 <= w.size(); ++start) {
                    const std::size_t end = start + gen.size() - 1;
                    if (w.slice(start, end) != gen) continue;
                    const Word sv = w.slice(start, w.size());
                    int occurrences = 0;
                    for (const Word& g2 : s.words()) {
                        for (std::size_t s2 = 1; s2 + g2.size() - 1 <= sv.size(); ++s2) {
                            if (sv.slice(s2, s2 + g2.size() - 1) == g2) ++occurrences;
                        }
                    }
                    if (occurrences == 1) ++valid;
                }
            }
            CHECK(valid == 1);
        }
    }
}

TEST_CASE("C_S for S={aa,aba} matches the quotient diagram") {
    const Dfa a = build_c_s(generators("aa,aba"));
    REQUIRE(a.num_states() == 7);
    const std::vector<std::pair<const char*, std::pair<const char*, const char*>>> rows{
        {"[aa]", {"[aa]", "[aab]"}},  {"[aab]", {"[aba]", "[abb]"}},
        {"[aba]", {"[aa]", "[aab]"}}, {"[abb]", {"[aba]", "[bbb]"}},
        {"[bab]", {"[aba]", "[bbb]"}}, {"[bba]", {"[aa]", "[bab]"}},
        {"[bbb]", {"[bba]", "[abb]"}},
    };
    for (State q = 0; q < 7; ++q) {
        CHECK(a.label(q) == rows[q].first);
        CHECK(a.label(a.next(q, 0)) == rows[q].second.first);
        CHECK(a.label(a.next(q, 1)) == rows[q].second.second);
    }
}

TEST_CASE("C_S with uniform generators and no merges equals B_T") {
    const GeneratorSet s = generators("aab,bba");
    const Dfa c = build_c_s(s);
    const Dfa bt = build_b_u(s, 3);
    CHECK(c.same_table(bt));
}

TEST_CASE("C_S covers the full-lift case where T is all of Sigma^n") {
    // Every length-2 word contains a or bb, so the lift is the whole level.
    const GeneratorSet s = generators("a,bb");
    const Dfa c = build_c_s(s);
    CHECK(c.num_states() == 3);
    const SynReport report = verify_construction(c, s);
    CHECK(report.strongly_connected);
    CHECK(report.syn_equals_ideal == true);

    const Dfa both = build_c_s(generators("a,b"));
    CHECK(both.num_states() == 2);
    CHECK(verify_construction(both, generators("a,b")).syn_equals_ideal == true);
}

TEST_CASE("C_S theorem holds on sampled generator sets") {
    for (const char* csv : {"ab", "aa,aba", "aa,bb", "aba,bab", "a", "aaab,bb"}) {
        const GeneratorSet s = generators(csv);
        const Dfa c = build_c_s(s);
        CHECK(c.num_states() <= (std::size_t{1} << s.max_length()));
        const SynReport report = verify_construction(c, s);
        CHECK(report.strongly_connected);
        CHECK(report.is_synchronizing);
        CHECK(report.syn_equals_ideal == true);
    }
}

TEST_CASE("C_S input validation") {
    CHECK_THROWS_AS(build_c_s(generators("a,aba")), InputError);          // not anti-factorial
    CHECK_THROWS_AS(build_c_s(generators(",aa")), InputError);            // epsilon generator
    CHECK_THROWS_AS(build_c_s(GeneratorSet(Alphabet(2), {})), InputError);
    CHECK_THROWS_AS(build_c_s(generators("ac", 3)), InputError);
}

TEST_CASE("overlap is the longest prefix-suffix match") {
    CHECK(overlap(word("abaab"), word("babab")) == word("ab"));
    CHECK(overlap(word("babab"), word("abaab")) == word("b"));
    CHECK(overlap(word("abaab"), word("abaab")) == word("abaab"));
    CHECK(overlap(word("aa"), word("bb")) == Word());
    CHECK(overlap(Word(), word("ab")) == Word());
}

TEST_CASE("pruned word automata") {
    const PrunedWordAutomaton pruned = build_pruned_word_automaton(word("aa"), Alphabet(2));
    REQUIRE(pruned.num_states == 2);
    CHECK(pruned.next(0, 0) == State{1});
    CHECK(pruned.next(0, 1) == State{0});
    CHECK_FALSE(pruned.next(1, 0).has_value()); // the deleted transition
    CHECK(pruned.next(1, 1) == State{0});
    CHECK(is_strongly_connected(pruned));

    CHECK(is_strongly_connected(build_pruned_word_automaton(word("abaab"), Alphabet(2))));
    // Outside the excluded shapes the claim can fail: b a^{k} loses the
    // way back to the start.
    CHECK_FALSE(is_strongly_connected(build_pruned_word_automaton(word("baa"), Alphabet(2))));
}

TEST_CASE("D_{u,v} for abaab and babab matches its diagram") {
    const Dfa d = build_d_uv(word("abaab"), word("babab"), Alphabet(2));
    REQUIRE(d.num_states() == 10);
    const std::vector<State> expected{
        1, 0, // eps^u
        1, 2, // a^u
        3, 0, // ab^u
        4, 2, // aba^u
        1, 6, // abaa^u, cross on b to b^v
        5, 6, // eps^v
        7, 6, // b^v
        5, 8, // ba^v
        9, 6, // bab^v
        5, 2, // baba^v, cross on b to ab^u
    };
    CHECK(d.transition_table() == expected);
    CHECK(d.label(4) == "abaa^u");
    CHECK(d.label(6) == "b^v");
    CHECK(d.label(9) == "baba^v");
    CHECK(d.label(2) == "ab^u");
}

TEST_CASE("D_{u,v} smallest case aa, bb") {
    const Dfa d = build_d_uv(word("aa"), word("bb"), Alphabet(2));
    REQUIRE(d.num_states() == 4);
    // a^u steps to eps^v on a; b^v steps to eps^u on b.
    CHECK(d.next(1, 0) == 2);
    CHECK(d.next(3, 1) == 0);
    const SynReport report = verify_construction(d, generators("aa,bb"));
    CHECK(report.strongly_connected);
    CHECK(report.syn_equals_ideal == true);
}

TEST_CASE("D_{u,v} input validation") {
    CHECK_THROWS_AS(build_d_uv(word("abaab"), word("abaab"), Alphabet(2)), InputError);
    CHECK_THROWS_AS(build_d_uv(word("ab"), word("abaab"), Alphabet(2)), InputError);
    CHECK_THROWS_WITH_AS(build_d_uv(word("abaab"), word("abbbb"), Alphabet(2)),
                         doctest::Contains("excluded shape"), InputError);
    CHECK_THROWS_AS(build_d_uv(word("a"), word("bb"), Alphabet(2)), InputError);
    CHECK_THROWS_AS(build_d_uv(word("aa"), word("bb"), Alphabet(3)), InputError);
}

TEST_CASE("D_{u,v} general-alphabet opt-in verifies itself") {
    const Dfa d = build_d_uv(word("aa", 3), word("bb", 3), Alphabet(3), true);
    CHECK(d.num_states() == 4);
    const SynReport report = verify_construction(d, generators("aa,bb", 3));
    CHECK(report.strongly_connected);
    CHECK(report.syn_equals_ideal == true);

    const Dfa d2 = build_d_uv(word("aca", 3), word("bcb", 3), Alphabet(3), true);
    CHECK(d2.num_states() == 6);
}

TEST_CASE("D_{u,v} theorem holds on sampled pairs") {
    const std::vector<std::pair<const char*, const char*>> pairs{
        {"aa", "bb"}, {"aba", "bab"}, {"aaa", "bbb"}, {"abba", "baab"}, {"aabab", "bbb"},
    };
    for (const auto& [u, v] : pairs) {
        const Dfa d = build_d_uv(word(u), word(v), Alphabet(2));
        CHECK(d.num_states() == word(u).size() + word(v).size());
        const SynReport report = verify_construction(d, generators(std::string(u) + "," + v));
        CHECK(report.strongly_connected);
        CHECK(report.syn_equals_ideal == true);
    }
}
