#include "idealsync/languages.hpp"

#include <algorithm>
#include <cstddef>

#include "idealsync/errors.hpp"

namespace idealsync {

GeneratorSet::GeneratorSet(Alphabet alphabet, std::vector<Word> words) : alphabet_(alphabet) {
    for (const Word& w : words) {
        if (w.empty()) {
            full_language_ = true;
            continue;
        }
        for (Letter x : w.letters()) {
            if (!alphabet_.contains(x)) {
                throw InputError("generator \"" + w.str() + "\" uses letters outside alphabet \"" +
                                 alphabet_.letters() + "\"");
            }
        }
    }
    if (full_language_) return;
    std::sort(words.begin(), words.end(), length_lex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    words_ = std::move(words);
}

GeneratorSet GeneratorSet::parse(std::string_view csv, std::optional<Alphabet> alphabet) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    if (!csv.empty()) {
        while (true) {
            const std::size_t comma = csv.find(',', start);
            tokens.emplace_back(csv.substr(start, comma - start));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    Alphabet sigma = alphabet.value_or(Alphabet(2));
    if (!alphabet) {
        std::size_t max_index = 0;
        for (const auto& t : tokens) {
            for (char c : t) {
                if (c < 'a' || c > 'z') {
                    throw InputError(std::string("unknown letter '") + c + "' in generator list");
                }
                max_index = std::max(max_index, static_cast<std::size_t>(c - 'a'));
            }
        }
        sigma = Alphabet(std::max<std::size_t>(2, max_index + 1));
    }
    std::vector<Word> words;
    words.reserve(tokens.size());
    for (const auto& t : tokens) words.push_back(Word::parse(t, sigma));
    return GeneratorSet(sigma, std::move(words));
}

GeneratorSet GeneratorSet::all_words_of_length(std::size_t n, const Alphabet& alphabet) {
    if (n == 0) return GeneratorSet(alphabet, {Word()});
    const std::size_t m = alphabet.size();
    std::vector<Word> words;
    std::vector<Letter> cur(n, 0);
    while (true) {
        words.push_back(Word(cur));
        std::size_t i = n;
        while (i > 0 && cur[i - 1] == m - 1) cur[--i] = 0;
        if (i == 0) break;
        ++cur[i - 1];
    }
    return GeneratorSet(alphabet, std::move(words));
}

std::size_t GeneratorSet::max_length() const {
    if (empty() || full_language_) throw InputError("max_length of empty or full-language set");
    return words_.back().size();
}

std::size_t GeneratorSet::min_length() const {
    if (empty() || full_language_) throw InputError("min_length of empty or full-language set");
    return words_.front().size();
}

bool GeneratorSet::is_anti_factorial() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        for (std::size_t j = 0; j < words_.size(); ++j) {
            if (i != j && is_factor(words_[i], words_[j])) return false;
        }
    }
    return true;
}

bool GeneratorSet::contains(const Word& w) const {
    return std::find(words_.begin(), words_.end(), w) != words_.end();
}

std::string GeneratorSet::str() const {
    if (full_language_) return "ε";
    std::string out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (i) out.push_back(',');
        out += words_[i].str();
    }
    return out;
}

bool is_factor(const Word& u, const Word& w) {
    if (u.empty()) return true;
    return std::search(w.letters().begin(), w.letters().end(), u.letters().begin(),
                       u.letters().end()) != w.letters().end();
}

GeneratorSet anti_factorial_reduce(const GeneratorSet& s) {
    if (s.generates_full_language()) return s;
    std::vector<Word> kept;
    for (const Word& w : s.words()) {
        bool has_proper_factor = false;
        for (const Word& u : s.words()) {
            if (u != w && is_factor(u, w)) {
                has_proper_factor = true;
                break;
            }
        }
        if (!has_proper_factor) kept.push_back(w);
    }
    return GeneratorSet(s.alphabet(), std::move(kept));
}

Recognizer build_word_automaton(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) throw InputError("word automaton needs a nonempty word");
    const std::size_t n = w.size();
    const std::size_t m = alphabet.size();
    for (Letter x : w.letters()) {
        if (!alphabet.contains(x)) throw InputError("word uses letters outside the alphabet");
    }
    // States are the prefixes of w, identified with their lengths 0..n.
    std::vector<State> delta((n + 1) * m);
    std::vector<std::string> labels(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        labels[i] = w.prefix(i).display();
        for (Letter x = 0; x < m; ++x) {
            if (i == n) {
                delta[i * m + x] = static_cast<State>(n); // sink
                continue;
            }
            const Word t = w.prefix(i).appended(static_cast<Letter>(x));
            std::size_t k = std::min(n, t.size());
            while (k > 0 && !is_suffix_of(w.prefix(k), t)) --k;
            delta[i * m + x] = static_cast<State>(k);
        }
    }
    StateSet accepting(n + 1);
    accepting.set(static_cast<State>(n));
    return Recognizer(Dfa(alphabet, n + 1, std::move(delta), std::move(labels)), 0, accepting);
}

namespace {

struct TrieNode {
    std::vector<int> child;   // -1 when absent
    int fail = 0;
    bool terminal = false;
    bool matched = false;
};

} // namespace

Recognizer build_ideal_recognizer(const GeneratorSet& s) {
    const Alphabet sigma = s.alphabet();
    const std::size_t m = sigma.size();

    if (s.generates_full_language()) {
        std::vector<State> delta(m, 0);
        StateSet accepting(1);
        accepting.set(0);
        return Recognizer(Dfa(sigma, 1, std::move(delta)), 0, accepting);
    }
    if (s.empty()) {
        std::vector<State> delta(m, 0);
        return Recognizer(Dfa(sigma, 1, std::move(delta)), 0, StateSet(1));
    }

    // Trie over the generators with breadth-first failure links; a node is
    // matched when some suffix of its path lies in S.
    std::vector<TrieNode> trie(1, TrieNode{std::vector<int>(m, -1), 0, false, false});
    for (const Word& w : s.words()) {
        int node = 0;
        for (Letter x : w.letters()) {
            if (trie[node].child[x] < 0) {
                trie[node].child[x] = static_cast<int>(trie.size());
                trie.emplace_back(TrieNode{std::vector<int>(m, -1), 0, false, false});
            }
            node = trie[node].child[x];
        }
        trie[node].terminal = true;
    }
    std::vector<int> bfs{0};
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        const int node = bfs[head];
        for (std::size_t x = 0; x < m; ++x) {
            const int c = trie[node].child[x];
            if (c < 0) continue;
            int f = trie[node].fail;
            while (f != 0 && trie[f].child[x] < 0) f = trie[f].fail;
            if (node != 0 && trie[f].child[x] >= 0) trie[c].fail = trie[f].child[x];
            trie[c].matched = trie[c].terminal || trie[trie[c].fail].matched;
            bfs.push_back(c);
        }
    }

    // DFA states: unmatched trie nodes in BFS order, plus one absorbing
    // accepting state at the end.
    std::vector<int> dfa_id(trie.size(), -1);
    std::vector<int> kept;
    for (int node : bfs) {
        if (!trie[node].matched) {
            dfa_id[node] = static_cast<int>(kept.size());
            kept.push_back(node);
        }
    }
    const std::size_t num_states = kept.size() + 1;
    const State accept = static_cast<State>(kept.size());
    std::vector<State> delta(num_states * m);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t x = 0; x < m; ++x) {
            int node = kept[i];
            while (node != 0 && trie[node].child[x] < 0) node = trie[node].fail;
            const int succ = trie[node].child[x] >= 0 ? trie[node].child[x] : 0;
            delta[i * m + x] =
                trie[succ].matched ? accept : static_cast<State>(dfa_id[succ]);
        }
    }
    for (std::size_t x = 0; x < m; ++x) delta[accept * m + x] = accept;
    StateSet accepting(num_states);
    accepting.set(accept);
    return minimize(Recognizer(Dfa(sigma, num_states, std::move(delta)), 0, accepting));
}

Recognizer minimize(const Recognizer& r) {
    const Dfa& a = r.dfa();
    const std::size_t m = a.alphabet().size();

    // Trim to the part reachable from the initial state.
    const auto order = bfs_order(a, r.initial());
    const std::size_t n = order.size();
    std::vector<State> compact(a.num_states());
    for (std::size_t i = 0; i < n; ++i) compact[order[i]] = static_cast<State>(i);
    std::vector<State> delta(n * m);
    std::vector<bool> accepting(n);
    for (std::size_t i = 0; i < n; ++i) {
        accepting[i] = r.is_accepting(order[i]);
        for (std::size_t x = 0; x < m; ++x) {
            delta[i * m + x] = compact[a.next(order[i], static_cast<Letter>(x))];
        }
    }

    // Moore partition refinement; class ids stay dense throughout.
    std::vector<State> cls(n, 0);
    std::size_t num_classes = 1;
    const bool has_accepting = std::find(accepting.begin(), accepting.end(), true) != accepting.end();
    const bool has_rejecting = std::find(accepting.begin(), accepting.end(), false) != accepting.end();
    if (has_accepting && has_rejecting) {
        for (std::size_t i = 0; i < n; ++i) cls[i] = accepting[i] ? 1 : 0;
        num_classes = 2;
    }
    while (true) {
        std::vector<std::pair<std::vector<State>, State>> sigs(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<State> sig(m + 1);
            sig[0] = cls[i];
            for (std::size_t x = 0; x < m; ++x) sig[x + 1] = cls[delta[i * m + x]];
            sigs[i] = {std::move(sig), static_cast<State>(i)};
        }
        std::sort(sigs.begin(), sigs.end());
        std::vector<State> next_cls(n);
        std::size_t next_count = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && sigs[i].first != sigs[i - 1].first) ++next_count;
            next_cls[sigs[i].second] = static_cast<State>(next_count);
        }
        ++next_count;
        if (next_count == num_classes) break;
        cls = std::move(next_cls);
        num_classes = next_count;
    }

    std::vector<State> qdelta(num_classes * m);
    std::vector<bool> qaccept(num_classes, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < m; ++x) qdelta[cls[i] * m + x] = cls[delta[i * m + x]];
        if (accepting[i]) qaccept[cls[i]] = true;
    }

    // Canonical renumbering: breadth-first from the initial class.
    Dfa quotient(a.alphabet(), num_classes, qdelta);
    const auto qorder = bfs_order(quotient, cls[0]);
    std::vector<State> qid(num_classes);
    for (std::size_t i = 0; i < qorder.size(); ++i) qid[qorder[i]] = static_cast<State>(i);
    std::vector<State> final_delta(num_classes * m);
    StateSet final_accepting(num_classes);
    for (std::size_t i = 0; i < num_classes; ++i) {
        const State c = qorder[i];
        for (std::size_t x = 0; x < m; ++x) final_delta[i * m + x] = qid[qdelta[c * m + x]];
        if (qaccept[c]) final_accepting.set(static_cast<State>(i));
    }
    return Recognizer(Dfa(a.alphabet(), num_classes, std::move(final_delta)), 0,
                      final_accepting);
}

bool equivalent(const Recognizer& r1, const Recognizer& r2) {
    if (r1.dfa().alphabet() != r2.dfa().alphabet()) {
        throw InputError("equivalence check needs a common alphabet");
    }
    const Recognizer m1 = minimize(r1);
    const Recognizer m2 = minimize(r2);
    return m1.dfa().same_table(m2.dfa()) && m1.accepting() == m2.accepting();
}

bool member(const Recognizer& r, const Word& w) {
    return r.is_accepting(apply(r.dfa(), r.initial(), w));
}

} // namespace idealsync
