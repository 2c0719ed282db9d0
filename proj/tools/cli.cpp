#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "idealsync/analysis.hpp"
#include "idealsync/constructions.hpp"
#include "idealsync/errors.hpp"
#include "idealsync/io.hpp"
#include "idealsync/languages.hpp"

namespace idealsync::cli {

namespace {

std::size_t subset_cap_from_env() {
    const char* raw = std::getenv("IDEALSYNC_SUBSET_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultSubsetCap;
    char* end = nullptr;
    const unsigned long value = std::strtoul(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) {
        throw InputError("IDEALSYNC_SUBSET_CAP must be a positive integer, got \"" +
                         std::string(raw) + "\"");
    }
    return static_cast<std::size_t>(value);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open \"" + path + "\" for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open \"" + path + "\" for writing");
    file << text;
}

/// Ordered key=value report with a JSON rendering of the same keys.
class Report {
public:
    using Value = std::variant<bool, std::uint64_t, std::string, std::vector<std::string>>;

    void add(std::string key, Value value) { entries_.emplace_back(std::move(key), std::move(value)); }
    void add_count(std::string key, std::uint64_t v) { add(std::move(key), v); }

    std::string text() const {
        std::ostringstream out;
        for (const auto& [key, value] : entries_) {
            out << key << '=';
            if (const bool* b = std::get_if<bool>(&value)) {
                out << (*b ? "yes" : "no");
            } else if (const auto* n = std::get_if<std::uint64_t>(&value)) {
                out << *n;
            } else if (const auto* s = std::get_if<std::string>(&value)) {
                out << *s;
            } else {
                const auto& list = std::get<std::vector<std::string>>(value);
                for (std::size_t i = 0; i < list.size(); ++i) out << (i ? "," : "") << list[i];
            }
            out << '\n';
        }
        return out.str();
    }

    std::string json() const {
        nlohmann::json j;
        for (const auto& [key, value] : entries_) {
            if (const bool* b = std::get_if<bool>(&value)) {
                j[key] = *b;
            } else if (const auto* n = std::get_if<std::uint64_t>(&value)) {
                j[key] = *n;
            } else if (const auto* s = std::get_if<std::string>(&value)) {
                j[key] = *s;
            } else {
                j[key] = std::get<std::vector<std::string>>(value);
            }
        }
        return j.dump() + "\n";
    }

private:
    std::vector<std::pair<std::string, Value>> entries_;
};

std::vector<std::string> word_strings(const GeneratorSet& s) {
    std::vector<std::string> out;
    for (const Word& w : s.words()) out.push_back(w.str());
    return out;
}

std::optional<Alphabet> alphabet_option(const std::string& letters) {
    if (letters.empty()) return std::nullopt;
    return Alphabet::from_letters(letters);
}

struct VerifyExpectation {
    std::optional<std::size_t> exact_states;
    std::optional<std::size_t> max_states;
};

int emit_verify(const SynReport& report, const GeneratorSet& gens, const std::string& name,
                const VerifyExpectation& expect, bool as_json, std::ostream& out) {
    bool states_ok = true;
    if (expect.exact_states) states_ok = report.state_count == *expect.exact_states;
    if (expect.max_states) states_ok = states_ok && report.state_count <= *expect.max_states;
    const bool syn_ok = report.syn_equals_ideal.value_or(false);
    const bool ok = report.strongly_connected && syn_ok && states_ok;

    Report r;
    r.add("construction", name);
    r.add("generators", word_strings(gens));
    r.add_count("states", report.state_count);
    if (expect.exact_states) r.add_count("expected_states", *expect.exact_states);
    if (expect.max_states) r.add_count("max_states", *expect.max_states);
    r.add("states_ok", states_ok);
    r.add("strongly_connected", report.strongly_connected);
    r.add("is_synchronizing", report.is_synchronizing);
    if (report.shortest_reset) {
        r.add("shortest_reset", report.shortest_reset->display());
        r.add_count("shortest_reset_length", report.shortest_reset->size());
    }
    r.add("syn_equals_ideal", syn_ok);
    r.add("ok", ok);
    out << (as_json ? r.json() : r.text());
    return ok ? 0 : 1;
}

GeneratorSet parse_reduced_generators(const std::string& csv, const std::string& letters) {
    const GeneratorSet raw = GeneratorSet::parse(csv, alphabet_option(letters));
    return anti_factorial_reduce(raw);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"strongly connected synchronizing automata for finitely generated ideal "
                 "languages"};
    app.require_subcommand(1);

    // ---- construction commands ----
    struct {
        unsigned n = 0;
        std::string alphabet = "ab";
        std::string out_path = "-";
    } debruijn;
    auto* cmd_debruijn = app.add_subcommand("debruijn", "De Bruijn automaton for length n");
    cmd_debruijn->add_option("--n", debruijn.n, "word length")->required();
    cmd_debruijn->add_option("--alphabet", debruijn.alphabet, "alphabet letters (default ab)");
    cmd_debruijn->add_option("--out", debruijn.out_path, "output path (default stdout)");

    struct {
        std::string gens;
        unsigned n = 0;
        std::string alphabet;
        std::string out_path = "-";
    } bu;
    auto* cmd_bu = app.add_subcommand("bu", "modified De Bruijn automaton B_U for uniform-length "
                                            "generators");
    cmd_bu->add_option("--gens", bu.gens, "comma-separated generators")->required();
    cmd_bu->add_option("--n", bu.n, "generator length (default: inferred)");
    cmd_bu->add_option("--alphabet", bu.alphabet, "alphabet letters (default: inferred)");
    cmd_bu->add_option("--out", bu.out_path, "output path (default stdout)");

    struct {
        std::string gens;
        std::string alphabet;
        std::string out_path = "-";
    } cs;
    auto* cmd_cs = app.add_subcommand("cs", "quotient automaton C_S for an anti-factorial "
                                            "generator set");
    cmd_cs->add_option("--gens", cs.gens, "comma-separated generators")->required();
    cmd_cs->add_option("--alphabet", cs.alphabet, "alphabet letters (default: inferred)");
    cmd_cs->add_option("--out", cs.out_path, "output path (default stdout)");

    struct {
        std::string u, v;
        std::string alphabet;
        bool general = false;
        std::string out_path = "-";
    } duv;
    auto* cmd_duv = app.add_subcommand("duv", "two-word gluing D_{u,v}");
    cmd_duv->add_option("--u", duv.u, "first word")->required();
    cmd_duv->add_option("--v", duv.v, "second word")->required();
    cmd_duv->add_option("--alphabet", duv.alphabet, "alphabet letters (default: inferred)");
    cmd_duv->add_flag("--general", duv.general,
                      "allow alphabets beyond two letters and verify the result");
    cmd_duv->add_option("--out", duv.out_path, "output path (default stdout)");

    // ---- analysis commands ----
    struct {
        std::string in_path;
        std::string out_path;
        bool json = false;
    } syn;
    auto* cmd_syn = app.add_subcommand("syn", "synchronization report for an automaton file");
    cmd_syn->add_option("--in", syn.in_path, "automaton file ('-' for stdin)")->required();
    cmd_syn->add_option("--out", syn.out_path, "write the synchronizing-language recognizer here");
    cmd_syn->add_flag("--json", syn.json, "emit the report as JSON");

    auto* cmd_verify =
        app.add_subcommand("verify", "check a construction against its ideal language");
    cmd_verify->require_subcommand(1);
    struct {
        unsigned n = 0;
        std::string alphabet = "ab";
        bool json = false;
    } vdb;
    auto* cmd_vdb = cmd_verify->add_subcommand("debruijn", "verify the De Bruijn construction");
    cmd_vdb->add_option("--n", vdb.n, "word length")->required();
    cmd_vdb->add_option("--alphabet", vdb.alphabet, "alphabet letters (default ab)");
    cmd_vdb->add_flag("--json", vdb.json, "emit the report as JSON");
    struct {
        std::string gens;
        unsigned n = 0;
        std::string alphabet;
        bool json = false;
    } vbu;
    auto* cmd_vbu = cmd_verify->add_subcommand("bu", "verify B_U");
    cmd_vbu->add_option("--gens", vbu.gens, "comma-separated generators")->required();
    cmd_vbu->add_option("--n", vbu.n, "generator length (default: inferred)");
    cmd_vbu->add_option("--alphabet", vbu.alphabet, "alphabet letters (default: inferred)");
    cmd_vbu->add_flag("--json", vbu.json, "emit the report as JSON");
    struct {
        std::string gens;
        std::string alphabet;
        bool json = false;
    } vcs;
    auto* cmd_vcs = cmd_verify->add_subcommand("cs", "verify C_S");
    cmd_vcs->add_option("--gens", vcs.gens, "comma-separated generators")->required();
    cmd_vcs->add_option("--alphabet", vcs.alphabet, "alphabet letters (default: inferred)");
    cmd_vcs->add_flag("--json", vcs.json, "emit the report as JSON");
    struct {
        std::string u, v;
        std::string alphabet;
        bool general = false;
        bool json = false;
    } vduv;
    auto* cmd_vduv = cmd_verify->add_subcommand("duv", "verify D_{u,v}");
    cmd_vduv->add_option("--u", vduv.u, "first word")->required();
    cmd_vduv->add_option("--v", vduv.v, "second word")->required();
    cmd_vduv->add_option("--alphabet", vduv.alphabet, "alphabet letters (default: inferred)");
    cmd_vduv->add_flag("--general", vduv.general, "allow alphabets beyond two letters");
    cmd_vduv->add_flag("--json", vduv.json, "emit the report as JSON");
    struct {
        std::string in_path;
        std::string gens;
        bool json = false;
    } vfile;
    auto* cmd_vfile = cmd_verify->add_subcommand(
        "file", "verify an automaton file against the ideal of a generator set");
    cmd_vfile->add_option("--in", vfile.in_path, "automaton file ('-' for stdin)")->required();
    cmd_vfile->add_option("--gens", vfile.gens, "comma-separated generators")->required();
    cmd_vfile->add_flag("--json", vfile.json, "emit the report as JSON");

    struct {
        std::string gens;
        unsigned kmax = 4;
        std::string out_path;
        bool json = false;
    } msa;
    auto* cmd_msa = app.add_subcommand(
        "search-msa", "smallest strongly connected automaton with the given synchronizing ideal");
    cmd_msa->add_option("--gens", msa.gens, "comma-separated generators")->required();
    cmd_msa->add_option("--kmax", msa.kmax, "largest state count to try (default 4)");
    cmd_msa->add_option("--out", msa.out_path, "write the first witness here");
    cmd_msa->add_flag("--json", msa.json, "emit the report as JSON");

    struct {
        std::string gens;
        unsigned kmax = 3;
        std::string out_path;
        bool json = false;
    } rc;
    auto* cmd_rc = app.add_subcommand(
        "search-rc", "smallest automaton of any shape with the given synchronizing ideal");
    cmd_rc->add_option("--gens", rc.gens, "comma-separated generators")->required();
    cmd_rc->add_option("--kmax", rc.kmax, "largest state count to try (default 3)");
    cmd_rc->add_option("--out", rc.out_path, "write the first witness here");
    cmd_rc->add_flag("--json", rc.json, "emit the report as JSON");

    struct {
        std::string in_path;
        std::string out_path = "-";
    } dot;
    auto* cmd_dot = app.add_subcommand("export-dot", "Graphviz text for an automaton file");
    cmd_dot->add_option("--in", dot.in_path, "automaton file ('-' for stdin)")->required();
    cmd_dot->add_option("--out", dot.out_path, "output path (default stdout)");

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        const int code = app.exit(e, usage, usage);
        (code == 0 ? out : err) << usage.str();
        return code == 0 ? 0 : 2;
    }

    try {
        const std::size_t cap = subset_cap_from_env();

        if (cmd_debruijn->parsed()) {
            const Dfa a = build_de_bruijn(debruijn.n, Alphabet::from_letters(debruijn.alphabet));
            write_output(debruijn.out_path, render(a), out);
            return 0;
        }
        if (cmd_bu->parsed()) {
            const GeneratorSet u = GeneratorSet::parse(bu.gens, alphabet_option(bu.alphabet));
            const unsigned n = bu.n != 0 ? bu.n : static_cast<unsigned>(u.max_length());
            write_output(bu.out_path, render(build_b_u(u, n)), out);
            return 0;
        }
        if (cmd_cs->parsed()) {
            const GeneratorSet s = parse_reduced_generators(cs.gens, cs.alphabet);
            write_output(cs.out_path, render(build_c_s(s)), out);
            return 0;
        }
        if (cmd_duv->parsed()) {
            const GeneratorSet pair =
                GeneratorSet::parse(duv.u + "," + duv.v, alphabet_option(duv.alphabet));
            const Alphabet sigma = pair.alphabet();
            const Dfa a = build_d_uv(Word::parse(duv.u, sigma), Word::parse(duv.v, sigma), sigma,
                                     duv.general);
            write_output(duv.out_path, render(a), out);
            return 0;
        }

        if (cmd_syn->parsed()) {
            const AutomatonFile file = parse_automaton(read_input(syn.in_path));
            const SynReport report = analyze(file.dfa, cap);
            Report r;
            r.add_count("states", report.state_count);
            r.add("strongly_connected", report.strongly_connected);
            r.add("is_synchronizing", report.is_synchronizing);
            if (report.shortest_reset) {
                r.add("shortest_reset", report.shortest_reset->display());
                r.add_count("shortest_reset_length", report.shortest_reset->size());
            }
            r.add_count("syn_states", report.syn_recognizer.dfa().num_states());
            r.add_count("syn_min_states", minimize(report.syn_recognizer).dfa().num_states());
            out << (syn.json ? r.json() : r.text());
            if (!syn.out_path.empty()) {
                write_output(syn.out_path, render(report.syn_recognizer), out);
            }
            return 0;
        }

        if (cmd_vdb->parsed()) {
            const Alphabet sigma = Alphabet::from_letters(vdb.alphabet);
            const Dfa a = build_de_bruijn(vdb.n, sigma);
            const GeneratorSet s = GeneratorSet::all_words_of_length(vdb.n, sigma);
            VerifyExpectation expect;
            expect.exact_states = std::size_t{1} << vdb.n;
            return emit_verify(verify_construction(a, s, cap), s, "debruijn", expect, vdb.json,
                               out);
        }
        if (cmd_vbu->parsed()) {
            const GeneratorSet u = GeneratorSet::parse(vbu.gens, alphabet_option(vbu.alphabet));
            const unsigned n = vbu.n != 0 ? vbu.n : static_cast<unsigned>(u.max_length());
            VerifyExpectation expect;
            expect.exact_states = std::size_t{1} << n;
            return emit_verify(verify_construction(build_b_u(u, n), u, cap), u, "bu", expect,
                               vbu.json, out);
        }
        if (cmd_vcs->parsed()) {
            const GeneratorSet s = parse_reduced_generators(vcs.gens, vcs.alphabet);
            VerifyExpectation expect;
            expect.max_states = std::size_t{1} << s.max_length();
            return emit_verify(verify_construction(build_c_s(s), s, cap), s, "cs", expect,
                               vcs.json, out);
        }
        if (cmd_vduv->parsed()) {
            const GeneratorSet pair =
                GeneratorSet::parse(vduv.u + "," + vduv.v, alphabet_option(vduv.alphabet));
            const Alphabet sigma = pair.alphabet();
            const Word u = Word::parse(vduv.u, sigma);
            const Word v = Word::parse(vduv.v, sigma);
            VerifyExpectation expect;
            expect.exact_states = u.size() + v.size();
            return emit_verify(verify_construction(build_d_uv(u, v, sigma, vduv.general), pair,
                                                   cap),
                               pair, "duv", expect, vduv.json, out);
        }
        if (cmd_vfile->parsed()) {
            const AutomatonFile file = parse_automaton(read_input(vfile.in_path));
            const GeneratorSet s = parse_reduced_generators(vfile.gens, "");
            if (s.alphabet() != file.dfa.alphabet()) {
                throw InputError("generator alphabet \"" + s.alphabet().letters() +
                                 "\" does not match the file alphabet \"" +
                                 file.dfa.alphabet().letters() + "\"");
            }
            return emit_verify(verify_construction(file.dfa, s, cap), s, "file", {}, vfile.json,
                               out);
        }

        if (cmd_msa->parsed() || cmd_rc->parsed()) {
            const bool is_msa = cmd_msa->parsed();
            const auto& opts_gens = is_msa ? msa.gens : rc.gens;
            const unsigned kmax = is_msa ? msa.kmax : rc.kmax;
            const std::string& out_path = is_msa ? msa.out_path : rc.out_path;
            const bool as_json = is_msa ? msa.json : rc.json;
            const GeneratorSet s = parse_reduced_generators(opts_gens, "");
            const SearchResult result = is_msa ? min_strongly_connected_search(s, kmax)
                                               : reset_complexity_search(s, kmax);
            Report r;
            r.add("search", std::string(is_msa ? "msa" : "rc"));
            r.add("generators", word_strings(s));
            r.add_count("kmax", result.k);
            r.add("found", result.found.has_value());
            if (result.found) {
                r.add_count("states", result.found->num_states());
                r.add_count("witnesses", result.witnesses.size());
            }
            r.add_count("searched", result.states_searched);
            out << (as_json ? r.json() : r.text());
            if (result.found && !out_path.empty()) {
                write_output(out_path, render(*result.found), out);
            }
            return 0;
        }

        if (cmd_dot->parsed()) {
            const AutomatonFile file = parse_automaton(read_input(dot.in_path));
            const std::string text =
                file.is_recognizer() ? export_dot(file.to_recognizer()) : export_dot(file.dfa);
            write_output(dot.out_path, text, out);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> with_name;
    with_name.reserve(args.size() + 1);
    with_name.emplace_back("idealsync");
    with_name.insert(with_name.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(with_name.size());
    for (const auto& a : with_name) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace idealsync::cli
