#include <benchmark/benchmark.h>

#include <vector>

#include "cto/controllers.hpp"
#include "cto/engine.hpp"
#include "cto/geometry.hpp"
#include "cto/graph.hpp"
#include "cto/random.hpp"

namespace {

const cto::Arena kArena{150, 150};

std::vector<cto::Point> random_points(cto::Rng& rng, std::size_t n) {
  std::vector<cto::Point> out(n);
  for (auto& p : out) p = {rng.uniform(0, 150), rng.uniform(0, 150)};
  return out;
}

void BM_Delaunay(benchmark::State& state) {
  cto::Rng rng(7);
  const auto pts = random_points(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cto::delaunay_triangulate(pts));
}
BENCHMARK(BM_Delaunay)->Arg(40)->Arg(200)->Arg(1000);

void BM_RandomGraph(benchmark::State& state) {
  cto::Rng rng(8);
  for (auto _ : state) benchmark::DoNotOptimize(cto::generate_random_graph(40, 150, 150, rng));
}
BENCHMARK(BM_RandomGraph);

void BM_HillClimbH(benchmark::State& state) {
  cto::Rng gen(9);
  const auto obs = random_points(gen, 12);
  const auto targets = random_points(gen, 24);
  cto::Rng rng(10);
  for (auto _ : state) benchmark::DoNotOptimize(cto::hc_h_control({obs, obs, targets, 15, kArena, rng}));
}
BENCHMARK(BM_HillClimbH);

void BM_KMeans(benchmark::State& state) {
  cto::Rng gen(11);
  const auto obs = random_points(gen, 12);
  const auto targets = random_points(gen, 24);
  cto::Rng rng(12);
  for (auto _ : state) benchmark::DoNotOptimize(cto::kmeans_control({obs, obs, targets, 15, kArena, rng}, 12));
}
BENCHMARK(BM_KMeans);

void BM_Simulation(benchmark::State& state) {
  cto::SimConfig cfg;
  cfg.controller = static_cast<cto::ControllerKind>(state.range(0));
  cfg.steps = 300;
  for (auto _ : state) benchmark::DoNotOptimize(cto::run_simulation(cfg).rho);
}
BENCHMARK(BM_Simulation)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
