#include "idealsync/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "idealsync/errors.hpp"

namespace idealsync {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) tokens.emplace_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::size_t parse_number(const std::string& token, std::size_t line_no, const char* what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " + what + ", got \"" +
                         token + "\"");
    }
    return value;
}

Alphabet parse_alphabet(const std::string& letters, std::size_t line_no) {
    try {
        return Alphabet::from_letters(letters);
    } catch (const InputError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
}

} // namespace

Recognizer AutomatonFile::to_recognizer() const {
    if (!initial) throw InputError("automaton file has no initial state");
    StateSet acc = accepting.value_or(StateSet(dfa.num_states()));
    return Recognizer(dfa, *initial, std::move(acc));
}

AutomatonFile parse_automaton(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
    {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            const std::size_t end = text.find('\n', start);
            const std::string_view line =
                text.substr(start, end == std::string_view::npos ? end : end - start);
            ++line_no;
            auto tokens = tokenize(line);
            if (!tokens.empty()) lines.emplace_back(line_no, std::move(tokens));
            if (end == std::string_view::npos) break;
            start = end + 1;
        }
    }
    if (lines.empty()) throw ParseError("line 1: empty automaton file");

    const auto& [header_no, header] = lines.front();
    if (header.size() != 3 || header[0] != "dfa") {
        throw ParseError("line " + std::to_string(header_no) +
                         ": expected header \"dfa <num_states> <letters>\"");
    }
    const std::size_t num_states = parse_number(header[1], header_no, "a state count");
    if (num_states == 0) {
        throw ParseError("line " + std::to_string(header_no) + ": state count must be positive");
    }
    const Alphabet sigma = parse_alphabet(header[2], header_no);
    const std::size_t m = sigma.size();

    std::vector<State> delta(num_states * m, 0);
    std::vector<std::string> labels(num_states);
    std::vector<bool> seen_row(num_states, false);
    bool any_label = false;
    std::optional<State> initial;
    std::optional<StateSet> accepting;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& [line_no, tokens] = lines[li];
        if (tokens[0] == "initial") {
            if (tokens.size() != 2) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected \"initial <index>\"");
            }
            const std::size_t q = parse_number(tokens[1], line_no, "a state index");
            if (q >= num_states) {
                throw ParseError("line " + std::to_string(line_no) + ": initial state " +
                                 tokens[1] + " outside 0.." + std::to_string(num_states - 1));
            }
            initial = static_cast<State>(q);
            continue;
        }
        if (tokens[0] == "accepting") {
            StateSet acc(num_states);
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                const std::size_t q = parse_number(tokens[t], line_no, "a state index");
                if (q >= num_states) {
                    throw ParseError("line " + std::to_string(line_no) + ": accepting state " +
                                     tokens[t] + " outside 0.." + std::to_string(num_states - 1));
                }
                acc.set(static_cast<State>(q));
            }
            accepting = std::move(acc);
            continue;
        }

        // State row: <index> <label?> : <targets...>
        const std::size_t q = parse_number(tokens[0], line_no, "a state index");
        if (q >= num_states) {
            throw ParseError("line " + std::to_string(line_no) + ": state index " + tokens[0] +
                             " outside 0.." + std::to_string(num_states - 1));
        }
        if (seen_row[q]) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate row for state " +
                             tokens[0]);
        }
        std::size_t pos = 1;
        if (pos < tokens.size() && tokens[pos] != ":") {
            labels[q] = tokens[pos];
            any_label = true;
            ++pos;
        }
        if (pos >= tokens.size() || tokens[pos] != ":") {
            throw ParseError("line " + std::to_string(line_no) + ": expected ':' in state row");
        }
        ++pos;
        for (std::size_t x = 0; x < m; ++x, ++pos) {
            if (pos >= tokens.size()) {
                throw InputError("incomplete delta at (" + std::to_string(q) + "," +
                                 std::string(1, sigma.letter_char(static_cast<Letter>(x))) +
                                 "): line " + std::to_string(line_no) + " has too few targets");
            }
            const std::size_t t = parse_number(tokens[pos], line_no, "a target state");
            if (t >= num_states) {
                throw ParseError("line " + std::to_string(line_no) + ": target " + tokens[pos] +
                                 " outside 0.." + std::to_string(num_states - 1));
            }
            delta[q * m + x] = static_cast<State>(t);
        }
        if (pos != tokens.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": trailing tokens after " +
                             std::to_string(m) + " targets");
        }
        seen_row[q] = true;
    }

    for (std::size_t q = 0; q < num_states; ++q) {
        if (!seen_row[q]) {
            throw InputError("incomplete delta at (" + std::to_string(q) + "," +
                             std::string(1, sigma.letter_char(0)) + "): state row missing");
        }
    }
    if (!any_label) labels.clear();
    return AutomatonFile{Dfa(sigma, num_states, std::move(delta), std::move(labels)), initial,
                         std::move(accepting)};
}

namespace {

void render_table(std::ostringstream& out, const Dfa& a) {
    const std::size_t m = a.alphabet().size();
    out << "dfa " << a.num_states() << ' ' << a.alphabet().letters() << '\n';
    for (State q = 0; q < a.num_states(); ++q) {
        out << q;
        if (a.has_labels()) out << ' ' << a.label(q);
        out << " :";
        for (Letter x = 0; x < m; ++x) out << ' ' << a.next(q, static_cast<Letter>(x));
        out << '\n';
    }
}

} // namespace

std::string render(const Dfa& a) {
    std::ostringstream out;
    render_table(out, a);
    return out.str();
}

std::string render(const Recognizer& r) {
    std::ostringstream out;
    render_table(out, r.dfa());
    out << "initial " << r.initial() << '\n';
    out << "accepting";
    r.accepting().for_each([&](State q) { out << ' ' << q; });
    out << '\n';
    return out.str();
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string export_dot_impl(const Dfa& a, const std::optional<State>& initial,
                            const StateSet* accepting) {
    const std::size_t m = a.alphabet().size();
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (State q = 0; q < a.num_states(); ++q) {
        out << "  q" << q << " [label=\"" << dot_escape(a.display_label(q)) << '"';
        if (accepting != nullptr && accepting->test(q)) out << ", shape=doublecircle";
        out << "];\n";
    }
    if (initial) {
        out << "  __start [shape=point, label=\"\"];\n";
        out << "  __start -> q" << *initial << ";\n";
    }
    for (State q = 0; q < a.num_states(); ++q) {
        // Merge parallel edges into one comma-joined label per target.
        for (State t = 0; t < a.num_states(); ++t) {
            std::string letters;
            for (Letter x = 0; x < m; ++x) {
                if (a.next(q, static_cast<Letter>(x)) == t) {
                    if (!letters.empty()) letters.push_back(',');
                    letters.push_back(a.alphabet().letter_char(static_cast<Letter>(x)));
                }
            }
            if (!letters.empty()) {
                out << "  q" << q << " -> q" << t << " [label=\"" << letters << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace

std::string export_dot(const Dfa& a) { return export_dot_impl(a, std::nullopt, nullptr); }

std::string export_dot(const Recognizer& r) {
    return export_dot_impl(r.dfa(), r.initial(), &r.accepting());
}

} // namespace idealsync
