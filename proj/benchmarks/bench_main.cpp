#include <benchmark/benchmark.h>

#include <random>

#include "lctinf/bergman.hpp"
#include "lctinf/lp.hpp"
#include "lctinf/multipliers.hpp"
#include "lctinf/thresholds.hpp"
#include "lctinf/verifier.hpp"

using namespace lctinf;

namespace {

std::vector<Point> cloud(std::size_t n, std::size_t count, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> d(0, 12);
  std::vector<Point> pts{Point(n, Rational(0))};
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    for (std::size_t k = 0; k < n; ++k) p.push_back(Rational(d(gen)));
    pts.push_back(p);
  }
  return pts;
}

void BM_Hull(benchmark::State& state) {
  auto pts = cloud(state.range(0), state.range(1), 1);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
}
BENCHMARK(BM_Hull)->Args({2, 40})->Args({3, 40})->Args({4, 20});

void BM_Volume(benchmark::State& state) {
  auto k = convex_hull(cloud(state.range(0), 30, 2));
  for (auto _ : state) benchmark::DoNotOptimize(volume(k));
}
BENCHMARK(BM_Volume)->Arg(2)->Arg(3);

void BM_MixedVolume(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::vector<Polytope> bodies;
  for (std::size_t k = 0; k < n; ++k) bodies.push_back(convex_hull(cloud(n, 8, 10 + k)));
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(bodies));
}
BENCHMARK(BM_MixedVolume)->Arg(2)->Arg(3);

void BM_DiagonalLp(benchmark::State& state) {
  auto k = convex_hull(cloud(state.range(0), 30, 3));
  for (auto _ : state) benchmark::DoNotOptimize(diagonal_lp_value(k));
}
BENCHMARK(BM_DiagonalLp)->Arg(2)->Arg(3);

void BM_LctPipeline(benchmark::State& state) {
  auto p = parse_map("z1^3*z2^3, z1^3, z1*z2^3, z2^2", 2);
  for (auto _ : state) {
    auto r = lct_map(p, nnd_check(p).status);
    auto nd = newton_polytopes(p);
    benchmark::DoNotOptimize(multipliers_at_infinity(nd.gamma_inf));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_LctPipeline)->Unit(benchmark::kMillisecond);

void BM_BergmanNorm(benchmark::State& state) {
  ToricFunction u(parse_indicator("0,0; 1,0; 0,1", 2));
  for (auto _ : state) benchmark::DoNotOptimize(bergman_log_norm(u, {0, 0}, static_cast<double>(state.range(0)), 3));
}
BENCHMARK(BM_BergmanNorm)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ShellMc(benchmark::State& state) {
  auto p = parse_map("z1^2*z2^3 - z1^2*z2", 2);
  ShellParams sp;
  sp.shells = 6;
  sp.samples_per_shell = 10000;
  for (auto _ : state) benchmark::DoNotOptimize(shell_mc_integral(p, 0.75, sp));
}
BENCHMARK(BM_ShellMc)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
