#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "nbho/eigensolver.hpp"
#include "nbho/jmatrix.hpp"
#include "nbho/oracle.hpp"

namespace {

nbho::ParticleSystem sized_system(int n) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> log_mass(std::log(0.1),
                                                  std::log(10.0));
  std::uniform_real_distribution<double> g_dist(0.1, 2.0);
  nbho::SystemInput in;
  in.dimension = 3;
  for (int i = 0; i < n; ++i) in.masses.push_back(std::exp(log_mass(rng)));
  for (int i = 0; i < n; ++i) in.one_body.push_back(g_dist(rng));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) in.two_body.push_back({i, j, g_dist(rng)});
  return nbho::validate_system(in);
}

void BM_BuildJ(benchmark::State& state) {
  const nbho::ParticleSystem sys = sized_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nbho::build_J(sys));
}
BENCHMARK(BM_BuildJ)->Arg(8)->Arg(32)->Arg(128);

void BM_Spectrum(benchmark::State& state) {
  const nbho::ParticleSystem sys = sized_system(static_cast<int>(state.range(0)));
  const nbho::JMatrix jm = nbho::build_J(sys);
  for (auto _ : state)
    benchmark::DoNotOptimize(nbho::spectrum_from_j(jm, sys));
}
BENCHMARK(BM_Spectrum)->Arg(8)->Arg(32)->Arg(64);

void BM_OracleNormalModes(benchmark::State& state) {
  const nbho::ParticleSystem sys = sized_system(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nbho::normal_modes(sys));
}
BENCHMARK(BM_OracleNormalModes)->Arg(8)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
