#include <benchmark/benchmark.h>

#include <zerodim/cbp.hpp>
#include <zerodim/dedekind.hpp>
#include <zerodim/idealops.hpp>
#include <zerodim/liaison.hpp>

#include "golden.hpp"

using namespace zerodim;

namespace {

void BM_buchberger_ambient_cubics(benchmark::State& state) {
    Ring r = golden::plane();
    std::vector<Poly> gens = {golden::parse(r, golden::F_str()),
                              golden::parse(r, golden::G_str())};
    for (auto _ : state) {
        GroebnerBasis g = buchberger(r, gens);
        benchmark::DoNotOptimize(g);
    }
}
BENCHMARK(BM_buchberger_ambient_cubics);

void BM_scheme_from_components(benchmark::State& state) {
    Ring r = golden::plane();
    std::vector<SchemeComponent> comps = golden::w_components();
    for (auto _ : state) {
        Scheme w = Scheme::from_components(r, comps);
        benchmark::DoNotOptimize(w.degree());
    }
}
BENCHMARK(BM_scheme_from_components);

void BM_hilbert_data(benchmark::State& state) {
    Ring r = golden::plane();
    std::vector<Poly> gens = {golden::parse(r, golden::F_str()),
                              golden::parse(r, golden::G_str())};
    for (auto _ : state) {
        HomogIdeal I(r, gens);
        benchmark::DoNotOptimize(I.hilbert_data().eventual);
    }
}
BENCHMARK(BM_hilbert_data);

void BM_residual_colon(benchmark::State& state) {
    Scheme W = golden::W_components();
    Scheme X = golden::X_deg5();
    for (auto _ : state) {
        HomogIdeal Y = colon(W.ideal(), X.ideal());
        benchmark::DoNotOptimize(Y.degree());
    }
}
BENCHMARK(BM_residual_colon);

void BM_cbp_methods(benchmark::State& state) {
    Scheme W = golden::W_components();
    Scheme X = golden::X_deg5();
    LinkageTriple t = make_linkage(W, X);
    CbpMethod m = static_cast<CbpMethod>(state.range(0));
    for (auto _ : state) {
        CbpVerdict v = cbp_check(X, 1, m, &t);
        benchmark::DoNotOptimize(v.verdict);
    }
}
BENCHMARK(BM_cbp_methods)->DenseRange(0, 4)->ArgNames({"method"});

void BM_separators(benchmark::State& state) {
    Scheme X = golden::X_ci22();
    for (auto _ : state) {
        SeparatorSet s = separators_of(X, 3);
        benchmark::DoNotOptimize(s.mu);
    }
}
BENCHMARK(BM_separators);

void BM_dedekind_table(benchmark::State& state) {
    Scheme X = golden::X_ci22();
    for (auto _ : state) {
        DedekindReport rep = dedekind_different(X, 42);
        benchmark::DoNotOptimize(rep.ri_delta);
    }
}
BENCHMARK(BM_dedekind_table);

void BM_ci_envelope(benchmark::State& state) {
    Scheme X = golden::X_ci22();
    for (auto _ : state) {
        EnvelopeResult e = ci_envelope(X, 3, {3, 3});
        benchmark::DoNotOptimize(e.attempts);
    }
}
BENCHMARK(BM_ci_envelope);

} // namespace

BENCHMARK_MAIN();
