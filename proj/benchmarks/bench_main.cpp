#include <benchmark/benchmark.h>

#include "mmf/jets.hpp"
#include "mmf/milnor.hpp"
#include "mmf/verify.hpp"

using namespace mmf;

static void BM_ExpandAndTree(benchmark::State& state) {
    static const char* curves[] = {"y^2-x^3", "(y-x)(y+x)(y-x^2)", "(y^2-x^3)(y^2-x^5)", "y^6-x^6"};
    const char* s = curves[state.range(0)];
    PlanePoly f = PlanePoly::parse(s);
    for (auto _ : state) {
        auto ts = build_trees(f);
        benchmark::DoNotOptimize(ts);
    }
    state.SetLabel(s);
}
BENCHMARK(BM_ExpandAndTree)->DenseRange(0, 3);

static void BM_GuibertMilnor(benchmark::State& state) {
    PlanePoly f = PlanePoly::parse("(y^2-x^3)(y^2-x^5)");
    auto ts = build_trees(f);
    const ContactTree& t = tree_at_origin(ts);
    for (auto _ : state) {
        auto S = guibert_milnor(t);
        benchmark::DoNotOptimize(S);
    }
}
BENCHMARK(BM_GuibertMilnor);

static void BM_ZetaCoefficient(benchmark::State& state) {
    PlanePoly f = PlanePoly::parse("y^2-x^3");
    auto ts = build_trees(f, 0, Rat(8));
    const ContactTree& t = tree_at_origin(ts);
    long n = state.range(0);
    for (auto _ : state) {
        auto Z = zeta_contact_coeff(t, n);
        benchmark::DoNotOptimize(Z);
    }
}
BENCHMARK(BM_ZetaCoefficient)->Arg(2)->Arg(6);

static void BM_CountJets(benchmark::State& state) {
    PlanePoly f = PlanePoly::parse("y^2-x^3");
    JetQuery jq;
    jq.F = f.c;
    jq.q = state.range(0);
    jq.n = state.range(1);
    for (auto _ : state) {
        auto c = count_jets(jq);
        benchmark::DoNotOptimize(c);
    }
    state.SetItemsProcessed(state.iterations() * (long)powl((long double)jq.q, 2 * jq.n));
}
BENCHMARK(BM_CountJets)->Args({3, 4})->Args({3, 6})->Args({5, 4});

static void BM_MuQ(benchmark::State& state) {
    PlanePoly f = PlanePoly::parse("(y^2-x^3)(y^2-x^5)");
    auto ts = build_trees(f);
    auto S = guibert_milnor(tree_at_origin(ts));
    for (auto _ : state) {
        Rat total(0);
        for (long a = 1; a < 13; ++a) total += mu_q(S, 13, a);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_MuQ);

BENCHMARK_MAIN();
