#include <benchmark/benchmark.h>

#include "asreg/catalog.hpp"
#include "asreg/point_scheme.hpp"
#include "asreg/rewriting.hpp"
#include "asreg/sampling.hpp"
#include "asreg/twisting.hpp"

using namespace asreg;

namespace {

QuadraticPresentation pres(const std::string& id) {
    return catalog_build(id, catalog_default_params(id)).presentation;
}

void BM_rref(benchmark::State& state) {
    size_t n = static_cast<size_t>(state.range(0));
    auto rng = protocol_rng(1);
    QMatrix m(n, n);
    for (auto& x : m.a) x = sample_rational(rng);
    for (auto _ : state) benchmark::DoNotOptimize(rref_rank(m));
}
BENCHMARK(BM_rref)->Arg(16)->Arg(32)->Arg(64);

void BM_graded_tower(benchmark::State& state) {
    size_t cap = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        GradedAlgebra alg(pres("ex_hung"));
        benchmark::DoNotOptimize(alg.dim(cap));
    }
}
BENCHMARK(BM_graded_tower)->Arg(3)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_minors(benchmark::State& state) {
    MultilinearMatrix m = multilinearize(pres("prop1_b0"));
    for (auto _ : state) benchmark::DoNotOptimize(compute_minors(m));
}
BENCHMARK(BM_minors)->Unit(benchmark::kMillisecond);

void BM_graph_space(benchmark::State& state) {
    auto rng = protocol_rng(2);
    QuadricSpec q(LinearForm::unit(0), LinearForm::unit(1));
    LinMapV tau = sample_invertible(rng, 4);
    for (auto _ : state) benchmark::DoNotOptimize(thcr_relation_space(q, tau));
}
BENCHMARK(BM_graph_space);

void BM_zhang_twist(benchmark::State& state) {
    auto rng = protocol_rng(3);
    QuadraticPresentation p = pres("plalg_d");
    LinMapV tau = sample_invertible(rng, 4);
    for (auto _ : state) benchmark::DoNotOptimize(zhang_twist(p, tau));
}
BENCHMARK(BM_zhang_twist);

void BM_rewrite_count(benchmark::State& state) {
    RewriteSystem rw = RewriteSystem::orient(pres("ex_hung"));
    for (auto _ : state) benchmark::DoNotOptimize(rw.irreducible_count(6));
}
BENCHMARK(BM_rewrite_count);

} // namespace

BENCHMARK_MAIN();
