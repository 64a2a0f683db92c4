#include "lapspec/parallel_search.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <thread>

#include "lapspec/errors.hpp"

namespace lapspec {

void validate(const SearchConfig& cfg) {
  if (cfg.instances < 1) throw config_error("instances: must be >= 1");
  if (cfg.total_batch < cfg.instances)
    throw config_error("total_batch: must be >= instances");
  if (cfg.max_generations < 1) throw config_error("max_generations: must be >= 1");
  conjecture_info(cfg.conjecture_id);  // throws config_error listing valid ids
  if (!cfg.resume_graph6.empty() && from_graph6(cfg.resume_graph6).n != cfg.n)
    throw config_error("resume_graph6: vertex count differs from n");
  for (const InstanceOverride& o : cfg.overrides)
    if (o.index < 0 || o.index >= cfg.instances)
      throw config_error("overrides: instance index " + std::to_string(o.index) +
                         " out of range");
  const std::vector<int> shares = split_batch(cfg.total_batch, cfg.instances);
  for (int i = 0; i < cfg.instances; ++i) {
    GenerationConfig g = instance_config(cfg, i);
    g.batch_size = shares[i];
    validate(g, cfg.n);
  }
}

std::vector<int> split_batch(int total, int instances) {
  if (instances < 1) throw config_error("instances: must be >= 1");
  if (total < instances) throw config_error("total_batch: must be >= instances");
  std::vector<int> shares(instances, total / instances);
  const int remainder = total % instances;
  for (int i = 0; i < remainder; ++i) ++shares[i];
  return shares;
}

InstanceSeeds instance_seeds(std::uint64_t master_seed, int index) {
  const auto idx = static_cast<std::uint64_t>(index);
  return {derive_seed(master_seed, idx, 0), derive_seed(master_seed, idx, 1)};
}

GenerationConfig instance_config(const SearchConfig& cfg, int index) {
  for (const InstanceOverride& o : cfg.overrides)
    if (o.index == index) return o.config;
  return cfg.gen;
}

namespace {

struct GlobalBest {
  std::mutex mutex;
  double reward = -std::numeric_limits<double>::infinity();
  std::optional<Graph> graph;
};

}  // namespace

SearchResult run_parallel(const SearchConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<int> shares = split_batch(cfg.total_batch, cfg.instances);

  std::vector<InstanceReport> reports(cfg.instances);
  GlobalBest global;
  std::atomic<bool> stop{false};

  auto worker = [&](int index) {
    InstanceReport& report = reports[index];
    report.index = index;
    try {
      GenerationConfig gen = instance_config(cfg, index);
      gen.batch_size = shares[index];
      const InstanceSeeds seeds = instance_seeds(cfg.master_seed, index);
      SearchInstance instance(cfg.n, cfg.conjecture_id, gen, seeds.net_seed,
                              seeds.rng_seed);
      if (!cfg.resume_graph6.empty())
        instance.plant_incumbent(from_graph6(cfg.resume_graph6));
      for (int g = 0; g < cfg.max_generations; ++g) {
        if (stop.load(std::memory_order_relaxed)) break;
        const GenerationStats stats = instance.run_generation();
        report.stats.push_back(stats);
        {
          // reporting only; never read back into the search
          std::lock_guard<std::mutex> lock(global.mutex);
          if (instance.incumbent() && instance.global_best_reward() > global.reward) {
            global.reward = instance.global_best_reward();
            global.graph = instance.incumbent()->graph;
          }
        }
        if (cfg.halt_on_counterexample && !instance.counterexamples().empty()) {
          stop.store(true, std::memory_order_relaxed);
          break;
        }
      }
      report.counterexamples = instance.counterexamples();
      report.best_reward = instance.global_best_reward();
      report.best = instance.incumbent();
    } catch (const std::exception& e) {
      report.error = e.what();
      report.best_reward = -std::numeric_limits<double>::infinity();
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(cfg.instances);
  for (int i = 0; i < cfg.instances; ++i) threads.emplace_back(worker, i);
  for (std::thread& t : threads) t.join();

  SearchResult result;
  result.instances = std::move(reports);
  result.best_reward = -std::numeric_limits<double>::infinity();
  for (const InstanceReport& r : result.instances) {
    if (r.best && r.best_reward > result.best_reward) {
      result.best_reward = r.best_reward;
      result.best_graph = r.best->graph;
    }
    for (const CounterexampleRecord& c : r.counterexamples)
      result.counterexamples.push_back(c);
  }
  result.halted_on_counterexample = !result.counterexamples.empty();
  result.wall_us = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace lapspec
