#include <benchmark/benchmark.h>

#include "lapspec/ce_engine.hpp"
#include "lapspec/conjectures.hpp"
#include "lapspec/policy_net.hpp"
#include "lapspec/rng.hpp"
#include "lapspec/spectral.hpp"

namespace {

lapspec::Graph random_graph(int n, double p, std::uint64_t seed) {
  lapspec::Rng rng(seed);
  lapspec::Graph g = lapspec::empty_graph(n);
  for (auto& b : g.edge_bits) b = rng.bernoulli(p) ? 1 : 0;
  return g;
}

void BM_spectral_radius(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lapspec::Graph g = random_graph(n, 0.4, 42);
  for (auto _ : state)
    benchmark::DoNotOptimize(lapspec::laplacian_spectral_radius(g).mu);
}
BENCHMARK(BM_spectral_radius)->Arg(12)->Arg(20)->Arg(32)->Arg(48);

void BM_bound_value(benchmark::State& state) {
  const lapspec::Graph g = random_graph(20, 0.4, 43);
  const int id = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lapspec::bound_value(id, g).value);
}
BENCHMARK(BM_bound_value)->Arg(3)->Arg(43)->Arg(64);

void BM_reward(benchmark::State& state) {
  const lapspec::Graph g = random_graph(20, 0.4, 44);
  for (auto _ : state) benchmark::DoNotOptimize(lapspec::reward(3, g));
}
BENCHMARK(BM_reward);

void BM_forward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lapspec::PolicyNetwork net(lapspec::architecture_for_vertices(n), 1);
  std::vector<double> obs(static_cast<std::size_t>(n) * (n - 1), 0.0);
  obs[0] = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(net.forward(obs)[1]);
}
BENCHMARK(BM_forward)->Arg(12)->Arg(20);

void BM_train_step(benchmark::State& state) {
  lapspec::PolicyNetwork net(lapspec::architecture_for_vertices(12), 2);
  lapspec::Rng rng(7);
  lapspec::TrainBatch batch;
  for (int s = 0; s < 128; ++s) {
    std::vector<double> obs(132);
    for (double& x : obs) x = rng.bernoulli(0.5) ? 1.0 : 0.0;
    batch.observations.push_back(std::move(obs));
    batch.actions.push_back(rng.bernoulli(0.5) ? 1 : 0);
  }
  for (auto _ : state) benchmark::DoNotOptimize(net.train_step(batch, 0.002));
}
BENCHMARK(BM_train_step);

void BM_rollout(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lapspec::PolicyNetwork net(lapspec::architecture_for_vertices(n), 3);
  lapspec::Rng rng(9);
  const std::vector<std::uint8_t> zero(lapspec::edge_slot_count(n), 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(lapspec::rollout(net, n, zero, false, rng).graph.n);
}
BENCHMARK(BM_rollout)->Arg(12)->Arg(20);

void BM_generation(benchmark::State& state) {
  lapspec::GenerationConfig cfg;
  cfg.batch_size = static_cast<int>(state.range(0));
  lapspec::SearchInstance inst(12, 3, cfg, 11, 12);
  for (auto _ : state) benchmark::DoNotOptimize(inst.run_generation().best_reward);
}
BENCHMARK(BM_generation)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
