#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lapspec/ce_engine.hpp"

namespace lapspec {

// Per-instance hyperparameter override; supported in config, unused by the
// default experiments.
struct InstanceOverride {
  int index = 0;
  GenerationConfig config;
};

struct SearchConfig {
  int n = 20;
  int conjecture_id = 3;
  int total_batch = 1000;
  int instances = 5;
  int max_generations = 400;
  std::uint64_t master_seed = 0;
  bool halt_on_counterexample = true;
  std::string resume_graph6;  // optional warm start planted in every instance
  GenerationConfig gen;  // template; batch_size is replaced by the split share
  std::vector<InstanceOverride> overrides;
};
void validate(const SearchConfig& cfg);  // throws config_error naming the field

// Shares differ by at most one and sum to total; larger shares go first.
std::vector<int> split_batch(int total, int instances);

// Derived (net_seed, rng_seed) for instance `index` under a master seed;
// fixed by (master_seed, index) alone, never by scheduling.
struct InstanceSeeds {
  std::uint64_t net_seed;
  std::uint64_t rng_seed;
};
InstanceSeeds instance_seeds(std::uint64_t master_seed, int index);

// Effective per-instance generation config (template or override, with the
// split batch share applied).
GenerationConfig instance_config(const SearchConfig& cfg, int index);

struct InstanceReport {
  int index = 0;
  std::vector<GenerationStats> stats;
  std::vector<CounterexampleRecord> counterexamples;
  double best_reward = 0.0;
  std::optional<RolloutRecord> best;  // incumbent at the end of the run
  std::string error;                  // nonempty if the instance died early
};

struct SearchResult {
  double best_reward = 0.0;
  std::optional<Graph> best_graph;
  std::vector<CounterexampleRecord> counterexamples;
  std::vector<InstanceReport> instances;
  std::int64_t wall_us = 0;
  bool halted_on_counterexample = false;
};

// Run `instances` independent CE instances, one worker thread each. Instances
// never exchange policies or elites; the only shared state is a mutex-guarded
// global-best record written at generation boundaries (reporting only) and
// the stop flag raised when a certified counterexample arrives while
// halt_on_counterexample is set. One instance's numeric failure ends that
// instance only.
SearchResult run_parallel(const SearchConfig& cfg);

}  // namespace lapspec
