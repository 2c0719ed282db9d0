#include <benchmark/benchmark.h>

#include "idealsync/analysis.hpp"
#include "idealsync/constructions.hpp"
#include "idealsync/io.hpp"
#include "idealsync/languages.hpp"

using namespace idealsync;

namespace {

void BM_BuildDeBruijn(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_de_bruijn(n, Alphabet(2)));
    }
}
BENCHMARK(BM_BuildDeBruijn)->Arg(4)->Arg(8)->Arg(12);

void BM_SynLanguageDeBruijn(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const Dfa a = build_de_bruijn(n, Alphabet(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(syn_language(a));
    }
}
BENCHMARK(BM_SynLanguageDeBruijn)->Arg(2)->Arg(3)->Arg(4);

void BM_ShortestResetDeBruijn(benchmark::State& state) {
    const Dfa a = build_de_bruijn(static_cast<unsigned>(state.range(0)), Alphabet(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(shortest_reset_word(a));
    }
}
BENCHMARK(BM_ShortestResetDeBruijn)->Arg(3)->Arg(4);

void BM_BuildBu(benchmark::State& state) {
    const GeneratorSet u = GeneratorSet::parse("aaba,abbb,babb", Alphabet(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_b_u(u, 4));
    }
}
BENCHMARK(BM_BuildBu);

void BM_BuildCs(benchmark::State& state) {
    const GeneratorSet s = GeneratorSet::parse("aa,abab,bbb", Alphabet(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_c_s(s));
    }
}
BENCHMARK(BM_BuildCs);

void BM_VerifyCs(benchmark::State& state) {
    const GeneratorSet s = GeneratorSet::parse("aa,abab,bbb", Alphabet(2));
    const Dfa a = build_c_s(s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_construction(a, s));
    }
}
BENCHMARK(BM_VerifyCs);

void BM_BuildDuv(benchmark::State& state) {
    const Word u = Word::parse("abaab", Alphabet(2));
    const Word v = Word::parse("babab", Alphabet(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_d_uv(u, v, Alphabet(2)));
    }
}
BENCHMARK(BM_BuildDuv);

void BM_MinimizeIdealRecognizer(benchmark::State& state) {
    const GeneratorSet level =
        GeneratorSet::all_words_of_length(static_cast<std::size_t>(state.range(0)), Alphabet(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_ideal_recognizer(level));
    }
}
BENCHMARK(BM_MinimizeIdealRecognizer)->Arg(4)->Arg(6)->Arg(8);

void BM_ResetComplexitySearch(benchmark::State& state) {
    const GeneratorSet s = GeneratorSet::parse("aa,ab,ba,bb", Alphabet(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reset_complexity_search(s, 3));
    }
}
BENCHMARK(BM_ResetComplexitySearch);

void BM_RenderParseRoundTrip(benchmark::State& state) {
    const Dfa a = build_de_bruijn(6, Alphabet(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_automaton(render(a)));
    }
}
BENCHMARK(BM_RenderParseRoundTrip);

} // namespace

BENCHMARK_MAIN();
