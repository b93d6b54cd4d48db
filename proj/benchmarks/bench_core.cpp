#include <benchmark/benchmark.h>

#include "sectorix/cmat.hpp"
#include "sectorix/means.hpp"
#include "sectorix/rng.hpp"
#include "sectorix/sector.hpp"
#include "sectorix/sweep.hpp"

namespace {

void BM_HermEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sectorix::Rng rng(42);
  const sectorix::CMatrix h = sectorix::random_hermitian(n, rng);
  for (auto _ : state) {
    auto e = sectorix::herm_eigen(h);
    benchmark::DoNotOptimize(e.values.front());
  }
}
BENCHMARK(BM_HermEigen)->Arg(4)->Arg(8)->Arg(16);

void BM_Inverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sectorix::Rng rng(43);
  sectorix::CMatrix a = sectorix::random_hermitian(n, rng);
  a += 4.0 * static_cast<double>(n) * sectorix::CMatrix::identity(n);
  for (auto _ : state) {
    auto inv = sectorix::inverse(a);
    benchmark::DoNotOptimize(inv(0, 0));
  }
}
BENCHMARK(BM_Inverse)->Arg(4)->Arg(8);

void BM_AccumulateInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sectorix::Rng rng(44);
  sectorix::CMatrix a = sectorix::random_hermitian(n, rng);
  a += 4.0 * static_cast<double>(n) * sectorix::CMatrix::identity(n);
  sectorix::InverseWorkspace ws(n);
  sectorix::CMatrix acc(n);
  for (auto _ : state) {
    ws.accumulate_inverse(a, 0.5, acc);
    benchmark::DoNotOptimize(acc(0, 0));
  }
}
BENCHMARK(BM_AccumulateInverse)->Arg(4)->Arg(8);

sectorix::SectorCertificate bench_sector(int n, double alpha, uint64_t seed) {
  sectorix::SectorGenSpec spec;
  spec.n = n;
  spec.alpha_max = alpha;
  spec.cond_x = 10.0;
  spec.seed = seed;
  return sectorix::gen_sector(spec);
}

void BM_GeometricMeanQuadrature(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sectorix::CMatrix a = bench_sector(n, 0.7, 45).a;
  const sectorix::CMatrix b = bench_sector(n, 0.7, 46).a;
  for (auto _ : state) {
    auto g = sectorix::geometric_mean_accretive(a, b, 0.5);
    benchmark::DoNotOptimize(g(0, 0));
  }
}
BENCHMARK(BM_GeometricMeanQuadrature)->Arg(3)->Arg(6);

void BM_GeometricMeanMultiWeight(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sectorix::CMatrix a = bench_sector(n, 0.7, 45).a;
  const sectorix::CMatrix b = bench_sector(n, 0.7, 46).a;
  const std::vector<double> vs{0.1, 0.25, 0.5, 0.75, 0.9};
  for (auto _ : state) {
    auto gs = sectorix::geometric_mean_accretive_multi(a, b, vs);
    benchmark::DoNotOptimize(gs.front()(0, 0));
  }
}
BENCHMARK(BM_GeometricMeanMultiWeight)->Arg(3)->Arg(6);

void BM_SectorAngle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const sectorix::CMatrix a = bench_sector(n, 0.9, 47).a;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sectorix::sector_angle(a));
  }
}
BENCHMARK(BM_SectorAngle)->Arg(3)->Arg(6)->Arg(12);

// One full catalogue trial (instance generation plus every check on its
// grids) through the public sweep interface.
void BM_SweepTrial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sectorix::SweepConfig cfg;
  cfg.n_values = {n};
  cfg.alphas = {0.7853981633974483};
  cfg.trials = 1;
  cfg.threads = 1;
  uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    auto rep = sectorix::sweep(cfg);
    benchmark::DoNotOptimize(rep.rows.front().evals);
  }
}
BENCHMARK(BM_SweepTrial)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
