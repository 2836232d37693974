#include <benchmark/benchmark.h>

#include "abchoice/corpus.hpp"
#include "abchoice/exact_oracle.hpp"
#include "abchoice/gadgets.hpp"
#include "abchoice/graph.hpp"
#include "abchoice/random_choice.hpp"
#include "abchoice/strong_partition.hpp"

using namespace abchoice;

namespace {

Execution mode(const benchmark::State& state)
{
    return state.range(0) ? Execution::Parallel : Execution::Serial;
}

void oracle_c6_42(benchmark::State& state)
{
    OracleOptions opt;
    opt.execution = mode(state);
    opt.budget = 2'000'000'000;
    const Graph g = make_cycle(6);
    for (auto _ : state) {
        const auto r = is_ab_choosable(g, 4, 2, opt);
        benchmark::DoNotOptimize(r.choosable);
        state.counters["assignments"] = static_cast<double>(r.assignments);
    }
}

void oracle_theta224_42(benchmark::State& state)
{
    OracleOptions opt;
    opt.execution = mode(state);
    opt.budget = 2'000'000'000;
    const Graph g = gen_theta(2, 2, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_ab_choosable(g, 4, 2, opt).choosable);
}

void oracle_k24_chk(benchmark::State& state)
{
    OracleOptions opt;
    opt.execution = mode(state);
    const Graph g = make_complete_bipartite(2, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(ch_k(g, 1, opt));
}

void random_multipartite(benchmark::State& state)
{
    const std::vector<int> sizes = {2, 2, 2, 2, 2, 2};
    Rng rng(5);
    const auto lists = random_lists(rng, 12, 16, 24);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const auto r = choose_multipartite(sizes, 1, lists, RandomBudget{seed++, 256}, mode(state));
        benchmark::DoNotOptimize(r.attempts);
    }
}

} // namespace

BENCHMARK(oracle_c6_42)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_theta224_42)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_k24_chk)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(random_multipartite)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
