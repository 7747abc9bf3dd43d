#include <benchmark/benchmark.h>

#include <vector>

#include "logcave/eigensolver.hpp"
#include "logcave/kernels.hpp"

using namespace logcave;

namespace {

const DiscreteOperator& op(int level) {
  static std::vector<std::pair<int, DiscreteOperator>> cache;
  for (const auto& [l, o] : cache) {
    if (l == level) return o;
  }
  cache.emplace_back(level, assemble_operator(MetricChart::sphere(), Domain::disk({0, 0}, 0.9), 0.9 / level));
  return cache.back().second;
}

template <void (*Spmv)(const kernels::CsrView&, std::span<const double>, std::span<double>)>
void bm_spmv(benchmark::State& state) {
  const auto& o = op(static_cast<int>(state.range(0)));
  const auto a = o.csr();
  std::vector<double> x(a.rows, 1.0), y(a.rows);
  for (auto _ : state) {
    Spmv(a, x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * a.rows);
}

template <void (*Jets)(const kernels::StencilView&, std::span<const double>, std::span<Jet>,
                       std::span<std::uint8_t>)>
void bm_jets(benchmark::State& state) {
  const auto& o = op(static_cast<int>(state.range(0)));
  const Grid& g = *o.grid;
  std::vector<double> f(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) f[k] = 1.0 + 0.001 * static_cast<double>(k % 97);
  std::vector<Jet> out(g.size());
  std::vector<std::uint8_t> ok(g.size());
  for (auto _ : state) {
    Jets(g.stencil(), f, out, ok);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(g.size()));
}

template <kernels::MaxLoc (*Max)(std::span<const double>, std::span<const std::uint8_t>)>
void bm_max_loc(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0)) * state.range(0);
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = static_cast<double>((k * 7919) % 104729);
  std::vector<std::uint8_t> m(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Max(v, m));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}

}  // namespace

BENCHMARK(bm_spmv<kernels::serial::spmv>)->Name("spmv/serial")->Arg(256)->Arg(1024);
BENCHMARK(bm_spmv<kernels::omp::spmv>)->Name("spmv/omp")->Arg(256)->Arg(1024);
BENCHMARK(bm_jets<kernels::serial::central_jets>)->Name("jets/serial")->Arg(256)->Arg(1024);
BENCHMARK(bm_jets<kernels::omp::central_jets>)->Name("jets/omp")->Arg(256)->Arg(1024);
BENCHMARK(bm_max_loc<kernels::serial::max_loc>)->Name("max_loc/serial")->Arg(256)->Arg(1024);
BENCHMARK(bm_max_loc<kernels::omp::max_loc>)->Name("max_loc/omp")->Arg(256)->Arg(1024);

BENCHMARK_MAIN();
