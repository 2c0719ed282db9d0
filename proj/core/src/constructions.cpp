#include "idealsync/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "idealsync/analysis.hpp"
#include "idealsync/errors.hpp"

namespace idealsync {

namespace {

constexpr Letter kA = 0;
constexpr Letter kB = 1;

// Value of a binary word read as a number, 'a' = 0 and 'b' = 1, first
// letter most significant. Bijection between Sigma^n and 0..2^n-1.
std::size_t word_value(const Word& w) {
    std::size_t v = 0;
    for (Letter x : w.letters()) v = (v << 1) | x;
    return v;
}

Word word_of_value(std::size_t value, std::size_t n) {
    std::vector<Letter> letters(n);
    for (std::size_t i = 0; i < n; ++i) {
        letters[n - 1 - i] = static_cast<Letter>((value >> i) & 1);
    }
    return Word(std::move(letters));
}

// B_U transition rules for any subset of Sigma^n given as a membership
// bitmap over word values. With U = Sigma^n every step keeps the plain
// De Bruijn rule, which is what the quotient construction relies on when
// the lifted set covers all of Sigma^n.
Dfa modified_de_bruijn(const std::vector<bool>& in_u, unsigned n, bool pair_labels) {
    const std::size_t count = std::size_t{1} << n;
    const std::size_t mask = count - 1;
    const std::size_t a_n = 0;        // value of a^n
    const std::size_t b_n = mask;     // value of b^n
    const std::size_t high = std::size_t{1} << (n - 1);

    std::vector<State> delta(count * 2);
    std::vector<std::string> labels(count);
    for (std::size_t q = 0; q < count; ++q) {
        const Word w = word_of_value(q, n);
        labels[q] = pair_labels
                        ? "(" + std::string(1, static_cast<char>('a' + w.at(1))) + "," +
                              w.slice(2, n).display() + ")"
                        : w.str();
        for (Letter y = kA; y <= kB; ++y) {
            const std::size_t uy = ((q << 1) | y) & mask;
            std::size_t target;
            if (in_u[uy]) {
                target = uy;
            } else if (uy == a_n) {
                target = (q == a_n) ? high : uy;
            } else if (uy == b_n) {
                target = (q == b_n) ? (mask ^ high) : uy;
            } else {
                target = (q & high) | (uy & (mask >> 1));
            }
            delta[q * 2 + y] = static_cast<State>(target);
        }
    }
    return Dfa(Alphabet(2), count, std::move(delta), std::move(labels));
}

void require_anti_factorial(const GeneratorSet& s, const char* op) {
    if (!s.is_anti_factorial()) {
        throw InputError(std::string(op) +
                         " requires an anti-factorial generator set; reduce \"" + s.str() +
                         "\" first");
    }
}

void require_proper_generators(const GeneratorSet& s, const char* op) {
    if (s.generates_full_language()) {
        throw InputError(std::string(op) +
                         " rejects the empty generator word: the generated ideal is the full "
                         "language Sigma*");
    }
    if (s.empty()) {
        throw InputError(std::string(op) + " needs a nonempty generator set");
    }
}

} // namespace

Dfa build_de_bruijn(unsigned n, const Alphabet& alphabet) {
    if (alphabet.size() < 2) {
        throw InputError("De Bruijn construction needs at least two letters");
    }
    if (n == 0) throw InputError("De Bruijn construction needs n >= 1");
    if (n >= 26) throw InputError("De Bruijn construction capped at n < 26");
    const std::size_t count = std::size_t{1} << n;
    const std::size_t mask = count - 1;
    const std::size_t m = alphabet.size();
    std::vector<State> delta(count * m);
    std::vector<std::string> labels(count);
    for (std::size_t q = 0; q < count; ++q) {
        labels[q] = word_of_value(q, n).str();
        for (std::size_t x = 0; x < m; ++x) {
            // Letters past 'b' act like 'a'.
            const std::size_t y = x <= 1 ? x : 0;
            delta[q * m + x] = static_cast<State>(((q << 1) | y) & mask);
        }
    }
    return Dfa(alphabet, count, std::move(delta), std::move(labels));
}

Dfa build_b_u(const GeneratorSet& u, unsigned n) {
    if (u.alphabet().size() != 2) {
        throw InputError("B_U is defined for the binary alphabet only; no transition rule is "
                         "given for further letters");
    }
    require_proper_generators(u, "B_U");
    if (n == 0 || n >= 26) throw InputError("B_U needs 1 <= n < 26");
    for (const Word& w : u.words()) {
        if (w.size() != n) {
            throw InputError("B_U needs generators of uniform length " + std::to_string(n) +
                             ", got \"" + w.str() + "\"");
        }
    }
    const std::size_t count = std::size_t{1} << n;
    if (u.words().size() == count) {
        throw InputError("U = Sigma^" + std::to_string(n) +
                         " is not a proper subset; use the De Bruijn construction instead");
    }
    std::vector<bool> in_u(count, false);
    for (const Word& w : u.words()) in_u[word_value(w)] = true;
    return modified_de_bruijn(in_u, n, /*pair_labels=*/true);
}

std::vector<Word> lift_generators(const GeneratorSet& s, unsigned n) {
    require_proper_generators(s, "lift_generators");
    require_anti_factorial(s, "lift_generators");
    if (s.max_length() > n) {
        throw InputError("lift length " + std::to_string(n) +
                         " is below the maximum generator length " +
                         std::to_string(s.max_length()));
    }
    if (s.alphabet().size() != 2) {
        throw InputError("lift_generators is defined for the binary alphabet only");
    }
    const std::size_t count = std::size_t{1} << n;
    std::vector<Word> lifted;
    for (std::size_t v = 0; v < count; ++v) {
        Word w = word_of_value(v, n);
        for (const Word& gen : s.words()) {
            if (is_factor(gen, w)) {
                lifted.push_back(std::move(w));
                break;
            }
        }
    }
    return lifted;
}

namespace {

Factorization factorize_rightmost(const Word& w, const GeneratorSet& s) {
    // Occurrence with the rightmost end position; anti-factoriality rules
    // out two occurrences sharing an end.
    std::size_t best_end = 0;
    const Word* best_gen = nullptr;
    for (const Word& gen : s.words()) {
        if (gen.empty() || gen.size() > w.size()) continue;
        for (std::size_t start = 1; start + gen.size() - 1 <= w.size(); ++start) {
            const std::size_t end = start + gen.size() - 1;
            if (w.slice(start, end) == gen && end > best_end) {
                best_end = end;
                best_gen = &gen;
            }
        }
    }
    if (best_gen == nullptr) {
        throw InputError("word \"" + w.str() + "\" contains no generator of {" + s.str() +
                         "} as a factor");
    }
    Factorization f{w.prefix(best_end - best_gen->size()), *best_gen,
                    w.slice(best_end + 1, w.size())};
    // The defining condition: sv contains exactly one occurrence, its prefix.
    const Word sv = f.s + f.v;
    for (const Word& gen : s.words()) {
        for (std::size_t start = 1; start + gen.size() - 1 <= sv.size(); ++start) {
            if (sv.slice(start, start + gen.size() - 1) == gen &&
                !(start == 1 && gen == f.s)) {
                throw std::logic_error("canonical factorization of \"" + w.str() +
                                       "\" is not unique");
            }
        }
    }
    return f;
}

} // namespace

Factorization canonical_factorization(const Word& w, const GeneratorSet& s) {
    require_anti_factorial(s, "canonical_factorization");
    return factorize_rightmost(w, s);
}

Dfa build_c_s(const GeneratorSet& s) {
    if (s.alphabet().size() != 2) {
        throw InputError("C_S is defined for the binary alphabet only; no transition rule is "
                         "given for further letters");
    }
    require_proper_generators(s, "C_S");
    require_anti_factorial(s, "C_S");

    const unsigned n = static_cast<unsigned>(s.max_length());
    const std::size_t count = std::size_t{1} << n;
    const auto lifted = lift_generators(s, n);
    std::vector<bool> in_t(count, false);
    for (const Word& w : lifted) in_t[word_value(w)] = true;
    const Dfa bt = modified_de_bruijn(in_t, n, /*pair_labels=*/false);

    // Class key of a state: the canonical suffix sv for states in T,
    // the word itself otherwise. Keys never collide across the two kinds
    // because an sv-key contains a generator and a non-T word does not.
    std::vector<Word> key(count);
    for (std::size_t q = 0; q < count; ++q) {
        const Word w = word_of_value(q, n);
        if (in_t[q]) {
            const Factorization f = factorize_rightmost(w, s);
            key[q] = f.s + f.v;
        } else {
            key[q] = w;
        }
    }

    std::vector<Word> class_keys;
    for (std::size_t q = 0; q < count; ++q) class_keys.push_back(key[q]);
    std::sort(class_keys.begin(), class_keys.end(), length_lex_less);
    class_keys.erase(std::unique(class_keys.begin(), class_keys.end()), class_keys.end());
    std::map<Word, State> class_id;
    for (std::size_t i = 0; i < class_keys.size(); ++i) {
        class_id.emplace(class_keys[i], static_cast<State>(i));
    }
    std::vector<State> cls(count);
    for (std::size_t q = 0; q < count; ++q) cls[q] = class_id.at(key[q]);

    // The merge relation must be a congruence: related states step to
    // related states under every letter.
    const std::size_t num_classes = class_keys.size();
    std::vector<State> qdelta(num_classes * 2, 0);
    std::vector<bool> assigned(num_classes * 2, false);
    for (std::size_t q = 0; q < count; ++q) {
        for (Letter x = kA; x <= kB; ++x) {
            const State target = cls[bt.next(static_cast<State>(q), x)];
            const std::size_t slot = cls[q] * 2 + x;
            if (assigned[slot] && qdelta[slot] != target) {
                throw std::logic_error("state merge relation is not a congruence at class [" +
                                       class_keys[cls[q]].str() + "]");
            }
            qdelta[slot] = target;
            assigned[slot] = true;
        }
    }

    std::vector<std::string> labels(num_classes);
    for (std::size_t i = 0; i < num_classes; ++i) labels[i] = "[" + class_keys[i].str() + "]";
    return Dfa(Alphabet(2), num_classes, std::move(qdelta), std::move(labels));
}

Word overlap(const Word& x, const Word& y) {
    for (std::size_t k = std::min(x.size(), y.size());; --k) {
        if (is_suffix_of(x.prefix(k), y)) return x.prefix(k);
        if (k == 0) return Word();
    }
}

PrunedWordAutomaton build_pruned_word_automaton(const Word& w, const Alphabet& alphabet) {
    if (w.size() < 1) throw InputError("pruned word automaton needs a nonempty word");
    const Recognizer full = build_word_automaton(w, alphabet);
    const std::size_t n = w.size();
    const std::size_t m = alphabet.size();
    PrunedWordAutomaton out{alphabet, n, std::vector<std::optional<State>>(n * m), {}};
    out.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.labels[i] = full.dfa().label(static_cast<State>(i));
        for (Letter x = 0; x < m; ++x) {
            if (i == n - 1 && x == w.at(n)) continue; // the deleted transition
            const State t = full.dfa().next(static_cast<State>(i), static_cast<Letter>(x));
            // Only the deleted transition could enter the sink.
            if (t >= n) throw std::logic_error("unexpected sink transition in pruned automaton");
            out.delta[i * m + x] = t;
        }
    }
    return out;
}

bool is_strongly_connected(const PrunedWordAutomaton& a) {
    const std::size_t n = a.num_states;
    const std::size_t m = a.alphabet.size();
    std::vector<std::vector<State>> adj(n), radj(n);
    for (State q = 0; q < n; ++q) {
        for (Letter x = 0; x < m; ++x) {
            if (auto t = a.next(q, static_cast<Letter>(x))) {
                adj[q].push_back(*t);
                radj[*t].push_back(q);
            }
        }
    }
    auto covers = [&](const std::vector<std::vector<State>>& graph) {
        std::vector<bool> seen(n, false);
        std::vector<State> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const State q = stack.back();
            stack.pop_back();
            for (State r : graph[q]) {
                if (!seen[r]) {
                    seen[r] = true;
                    stack.push_back(r);
                }
            }
        }
        return std::find(seen.begin(), seen.end(), false) == seen.end();
    };
    return covers(adj) && covers(radj);
}

namespace {

// The hypothesis of the two-word gluing excludes words a b^{n-1},
// a^{n-1} b, b a^{n-1}, b^{n-1} a; the pruned automaton can lose strong
// connectivity there.
bool is_excluded_shape(const Word& w) {
    const std::size_t n = w.size();
    auto run = [&](Letter x, std::size_t len, std::size_t from) {
        for (std::size_t i = 0; i < len; ++i) {
            if (w.at(from + i) != x) return false;
        }
        return true;
    };
    if (n < 2) return true;
    return (w.at(1) == kA && run(kB, n - 1, 2)) || (run(kA, n - 1, 1) && w.at(n) == kB) ||
           (w.at(1) == kB && run(kA, n - 1, 2)) || (run(kB, n - 1, 1) && w.at(n) == kA);
}

} // namespace

Dfa build_d_uv(const Word& u, const Word& v, const Alphabet& alphabet,
               bool allow_general_alphabet) {
    if (alphabet.size() < 2) throw InputError("D_{u,v} needs at least two letters");
    if (alphabet.size() > 2 && !allow_general_alphabet) {
        throw InputError("D_{u,v} is proven for the binary alphabet; pass the general-alphabet "
                         "option to build and verify the analog over \"" +
                         alphabet.letters() + "\"");
    }
    if (u.size() < 2 || v.size() < 2) {
        throw InputError("D_{u,v} needs |u| >= 2 and |v| >= 2");
    }
    if (is_excluded_shape(u) || is_excluded_shape(v)) {
        const Word& w = is_excluded_shape(u) ? u : v;
        throw InputError("word \"" + w.str() +
                         "\" has an excluded shape (a b^{k}, a^{k} b, b a^{k} or b^{k} a): the "
                         "gluing hypothesis rules these out");
    }
    if (is_factor(u, v) || is_factor(v, u)) {
        throw InputError("{" + u.str() + ", " + v.str() +
                         "} is not anti-factorial: one word is a factor of the other");
    }

    const std::size_t n = u.size();
    const std::size_t m_states = v.size();
    const std::size_t m = alphabet.size();
    const PrunedWordAutomaton pu = build_pruned_word_automaton(u, alphabet);
    const PrunedWordAutomaton pv = build_pruned_word_automaton(v, alphabet);
    const std::size_t cross_to_v = overlap(v, u).size(); // state of the v part
    const std::size_t cross_to_u = overlap(u, v).size(); // state of the u part

    std::vector<State> delta((n + m_states) * m);
    std::vector<std::string> labels(n + m_states);
    for (std::size_t i = 0; i < n; ++i) {
        labels[i] = pu.labels[i] + "^u";
        for (Letter x = 0; x < m; ++x) {
            const auto t = pu.next(static_cast<State>(i), static_cast<Letter>(x));
            delta[i * m + x] =
                t ? static_cast<State>(*t) : static_cast<State>(n + cross_to_v);
        }
    }
    for (std::size_t j = 0; j < m_states; ++j) {
        labels[n + j] = pv.labels[j] + "^v";
        for (Letter x = 0; x < m; ++x) {
            const auto t = pv.next(static_cast<State>(j), static_cast<Letter>(x));
            delta[(n + j) * m + x] =
                t ? static_cast<State>(n + *t) : static_cast<State>(cross_to_u);
        }
    }
    Dfa result(alphabet, n + m_states, std::move(delta), std::move(labels));

    if (alphabet.size() > 2) {
        GeneratorSet pair(alphabet, {u, v});
        const SynReport report = verify_construction(result, pair);
        if (!report.strongly_connected || !report.syn_equals_ideal.value_or(false)) {
            throw Error("general-alphabet gluing for {" + u.str() + ", " + v.str() +
                        "} over \"" + alphabet.letters() +
                        "\" failed verification; the binary theorem does not carry over here");
        }
    }
    return result;
}

} // namespace idealsync
