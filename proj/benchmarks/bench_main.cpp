#include <benchmark/benchmark.h>

#include "padic_fixvec/characters.hpp"
#include "padic_fixvec/cosets.hpp"
#include "padic_fixvec/finite_ring.hpp"
#include "padic_fixvec/gl2_dims.hpp"
#include "padic_fixvec/global_bounds.hpp"

namespace pf = padic_fixvec;

static void BM_EnumerateGL(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto m = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    std::uint64_t count = 0;
    pf::for_each_gl(2, p, m, [&](const pf::MatrixModPM&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateGL)->Args({3, 1})->Args({3, 2})->Args({5, 2});

static void BM_BorelCosetsCanonical(benchmark::State& state) {
  const pf::Partition borel{1, 1};
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pf::parabolic_index_enumerated(borel, p, 2, pf::kDefaultEnumerationBudget, pf::CosetMethod::canonical_key));
  }
}
BENCHMARK(BM_BorelCosetsCanonical)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_BorelCosetsProjective(benchmark::State& state) {
  const pf::Partition borel{1, 1};
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        pf::parabolic_index_enumerated(borel, p, 2, pf::kDefaultEnumerationBudget, pf::CosetMethod::projective_line));
  }
}
BENCHMARK(BM_BorelCosetsProjective)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_UnitDual(benchmark::State& state) {
  const auto p = static_cast<std::uint64_t>(state.range(0));
  const auto r = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pf::enumerate_unit_dual(p, r));
}
BENCHMARK(BM_UnitDual)->Args({7, 4})->Args({2, 10})->Unit(benchmark::kMillisecond);

static void BM_SupercuspidalClosedForm(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pf::dim_supercuspidal_minimal(7, 5, m));
}
BENCHMARK(BM_SupercuspidalClosedForm)->Arg(8)->Arg(64);

static void BM_SupercuspidalLattice(benchmark::State& state) {
  const auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pf::dim_supercuspidal_lattice(7, 5, m));
}
BENCHMARK(BM_SupercuspidalLattice)->Arg(8)->Arg(64);

static void BM_Factorize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pf::factorize(999999937ULL * 1000003ULL));
}
BENCHMARK(BM_Factorize);

BENCHMARK_MAIN();
