#include <benchmark/benchmark.h>

#include "covreg/betti.hpp"
#include "covreg/enumerate.hpp"
#include "covreg/families.hpp"
#include "covreg/indpoly.hpp"
#include "covreg/recursions.hpp"
#include "covreg/survey.hpp"

using namespace covreg;

namespace {

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(0, n - 1);
    return g;
}

void BM_independence_poly_path(benchmark::State& state) {
    Graph g = path(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial(g));
}
BENCHMARK(BM_independence_poly_path)->Arg(20)->Arg(40)->Arg(60);

void BM_independence_poly_whiskered(benchmark::State& state) {
    Graph g = whisker_all(cycle(5), 3);  // 20 vertices
    for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial(g));
}
BENCHMARK(BM_independence_poly_whiskered);

void BM_hochster_pdim_c9(benchmark::State& state) {
    Graph g = cycle(9);
    for (auto _ : state) benchmark::DoNotOptimize(hochster_pdim(g));
}
BENCHMARK(BM_hochster_pdim_c9);

void BM_canon_code(benchmark::State& state) {
    std::vector<Graph> graphs = connected_graphs(7);
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(canon_code(graphs[k]));
        k = (k + 1) % graphs.size();
    }
}
BENCHMARK(BM_canon_code);

void BM_survey_n6(benchmark::State& state) {
    SurveyOptions opt;
    opt.jobs = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_survey_internal(6, opt));
}
BENCHMARK(BM_survey_n6);

void BM_jk_pdim_forest(benchmark::State& state) {
    Graph g = path(14);
    for (auto _ : state) benchmark::DoNotOptimize(jk_pdim(g));
}
BENCHMARK(BM_jk_pdim_forest);

}  // namespace

BENCHMARK_MAIN();
