#include <benchmark/benchmark.h>

#include <random>

#include "cgs/classgroup.hpp"
#include "cgs/linalg.hpp"
#include "cgs/pip.hpp"
#include "cgs/poly.hpp"
#include "cgs/sieve.hpp"

namespace {

cgs::ZPoly random_poly(std::mt19937_64& rng, std::size_t deg, long bound) {
  cgs::ZPoly p(deg + 1);
  for (auto& c : p) c = static_cast<long>(rng() % static_cast<unsigned long>(2 * bound + 1)) - bound;
  p[deg] = 1;
  return p;
}

void BM_Resultant(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto deg = static_cast<std::size_t>(state.range(0));
  const cgs::ZPoly a = random_poly(rng, deg, 1000), b = random_poly(rng, deg - 1, 1000);
  for (auto _ : state) benchmark::DoNotOptimize(cgs::resultant(a, b));
}
BENCHMARK(BM_Resultant)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Hnf(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  cgs::Matrix M(2 * n, cgs::Vector(n));
  for (auto& row : M)
    for (auto& x : row) x = static_cast<long>(rng() % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(cgs::hnf(M));
}
BENCHMARK(BM_Hnf)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Snf(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  cgs::Matrix M(n, cgs::Vector(n));
  for (auto& row : M)
    for (auto& x : row) x = static_cast<long>(rng() % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(cgs::snf(M));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16);

void BM_SmoothPart(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::vector<cgs::Integer> values;
  for (int i = 0; i < 256; ++i) values.emplace_back(static_cast<unsigned long>(rng() >> 20));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(cgs::smooth_part(values[i++ % values.size()], 1000));
}
BENCHMARK(BM_SmoothPart);

void BM_Sieve(benchmark::State& state) {
  const auto K = cgs::NumberField::make({-1, -1, 0, 1});
  const auto fb = cgs::build_factor_base(K, 200);
  const cgs::SieveRegion region{2, state.range(0)};
  for (auto _ : state) {
    auto rels = cgs::collect_relations(K, fb, region, 1u << 30);
    benchmark::DoNotOptimize(rels.relations.size());
  }
}
BENCHMARK(BM_Sieve)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ClassGroupQuadratic(benchmark::State& state) {
  const long D = -static_cast<long>(state.range(0));
  const auto K = cgs::NumberField::make({-D / 4, 0, 1});
  cgs::PipelineConfig cfg;
  cfg.bound = 60;
  const auto fb = cgs::build_factor_base(K, cfg.bound);
  for (auto _ : state) benchmark::DoNotOptimize(cgs::run_classgroup(K, fb, cfg).result.h);
}
BENCHMARK(BM_ClassGroupQuadratic)->Arg(4 * 71)->Arg(4 * 401)->Unit(benchmark::kMillisecond);

void BM_ReduceIdeal(benchmark::State& state) {
  const auto K = cgs::NumberField::make({1, 0, 0, 0, 0, 1, 1});
  const auto fb = cgs::build_factor_base(K, 100);
  cgs::IdealHNF a = cgs::IdealHNF::unit(K);
  for (std::size_t i = 0; i < 4 && i < fb.size(); ++i) a = cgs::ideal_mul(K, a, fb.ideals[i].hnf(K));
  for (auto _ : state) benchmark::DoNotOptimize(cgs::reduce_ideal(K, a).x0_norm);
}
BENCHMARK(BM_ReduceIdeal);

}  // namespace

BENCHMARK_MAIN();
