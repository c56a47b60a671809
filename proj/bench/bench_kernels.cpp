// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "grpcx/builders.hpp"
#include "grpcx/kernels.hpp"
#include "grpcx/perm_group.hpp"

using namespace grpcx;

namespace
{

GroupPtr bench_group(std::int64_t n) { return symmetric(static_cast<std::size_t>(n)); }

kernels::Lookup lookup_of(PermGroup const &g)
{
  kernels::Lookup res;
  auto const &el = g.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    res.emplace(el[i], static_cast<ElementIndex>(i));
  return res;
}

template <bool parallel> void product_table(benchmark::State &state)
{
  auto g = bench_group(state.range(0));
  auto lookup = lookup_of(*g);
  for (auto _ : state) {
    auto t = parallel ? kernels::omp::product_table(g->elements(), lookup)
                      : kernels::serial::product_table(g->elements(), lookup);
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool parallel> void element_orders(benchmark::State &state)
{
  auto g = bench_group(state.range(0));
  for (auto _ : state) {
    auto t = parallel ? kernels::omp::element_orders(g->elements())
                      : kernels::serial::element_orders(g->elements());
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool parallel> void commutator_set(benchmark::State &state)
{
  auto g = bench_group(state.range(0));
  auto all = whole_group(g).members();
  for (auto _ : state) {
    auto s = parallel ? kernels::omp::commutator_set(*g, all, all)
                      : kernels::serial::commutator_set(*g, all, all);
    benchmark::DoNotOptimize(s);
  }
}

} // namespace

BENCHMARK(product_table<false>)->Arg(5)->Arg(6);
BENCHMARK(product_table<true>)->Arg(5)->Arg(6);
BENCHMARK(element_orders<false>)->Arg(6)->Arg(7);
BENCHMARK(element_orders<true>)->Arg(6)->Arg(7);
BENCHMARK(commutator_set<false>)->Arg(5);
BENCHMARK(commutator_set<true>)->Arg(5);

BENCHMARK_MAIN();
