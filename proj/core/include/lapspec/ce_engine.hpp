#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "lapspec/conjectures.hpp"
#include "lapspec/errors.hpp"
#include "lapspec/graph.hpp"
#include "lapspec/policy_net.hpp"
#include "lapspec/rng.hpp"

namespace lapspec {

// One in-progress graph construction. The observation the policy sees is
// edge_bits followed by a one-hot encoding of the current decision slot,
// total length 2 * n(n-1)/2.
struct RolloutState {
  std::vector<std::uint8_t> edge_bits;
  int position = 0;
  bool done = false;
};

RolloutState make_rollout_state(std::vector<std::uint8_t> initial_bits);
std::vector<double> build_observation(const RolloutState& state);  // lifecycle_error if done

// XOR action space: the action toggles the current edge bit rather than
// writing it, so rollouts can start from any graph. On a zero start this is
// identical to plain insertion.
void apply_action(RolloutState& state, bool action);  // lifecycle_error if done

struct GenerationConfig {
  int batch_size = 200;
  double elite_learn_frac = 0.10;    // share passed to the model for learning
  double elite_survive_frac = 0.05;  // share duplicated into the next generation
  double seed_fraction = 0.25;       // share of rollouts started from the incumbent
  double epsilon_random_frac = 0.0005;  // share of fully random rollouts
  double learning_rate = 0.002;
  std::vector<int> hidden_sizes{72, 12};
  double strict_tol = 1e-6;  // certification threshold on the margin
  double eig_tol = 1e-10;    // eigensolver tolerance during search
};
// throws config_error naming the offending field
void validate(const GenerationConfig& cfg, int n);

struct GenerationStats {
  int generation = 0;
  double best_reward = 0.0;
  double mean_reward = 0.0;
  double global_best_reward = 0.0;
  int edges_in_best = 0;
  bool counterexample_found = false;
  std::int64_t wall_us = 0;  // excluded from determinism comparisons
};

// One scored population member: the finished graph plus the trace that built
// it. Training pairs the observations actually seen with the actions actually
// taken, so traces survive alongside their graphs.
struct RolloutRecord {
  Graph graph;
  double reward = 0.0;
  std::vector<std::uint8_t> initial_bits;
  std::vector<std::uint8_t> actions;
};

struct RolloutResult {
  Graph graph;
  std::vector<std::uint8_t> actions;
};

// Drive one full construction with an arbitrary action source
// (bool(const std::vector<double>& obs, int position)).
template <typename ActionFn>
RolloutResult rollout_with(int n, std::vector<std::uint8_t> initial_bits, ActionFn&& act);

// Policy-driven rollout; with epsilon_random every action is uniform instead.
RolloutResult rollout(const PolicyNetwork& net, int n,
                      std::vector<std::uint8_t> initial_bits, bool epsilon_random,
                      Rng& rng);

// Replay a record's trace into (observation, action) training pairs.
void append_training_pairs(const RolloutRecord& rec, TrainBatch& batch);

// Per-generation batch composition. Counts are ceilings so tiny fractions
// still contribute at small batch sizes, and the random share stays constant
// across generations.
struct BatchPlan {
  int seeded = 0;  // rollouts starting from the incumbent's edge bits
  int random = 0;  // whole rollouts with uniform-random actions
  int zero = 0;    // rollouts from the empty graph
};
BatchPlan plan_batch(const GenerationConfig& cfg, bool has_incumbent);

struct EliteSelection {
  std::vector<int> learn;      // indices into the scored population, best first
  std::vector<int> survivors;  // prefix of learn
};

// Rank by reward descending, ties broken by lower index. Counts are
// ceil(frac * batch_size) so tiny fractions still contribute; survivors are
// included in the learning segment.
EliteSelection select_elites(const std::vector<double>& rewards,
                             const GenerationConfig& cfg);

using RewardFn = std::function<double(const Graph&)>;

// A single cross-entropy search instance: rollout a batch, score it, select
// elites, train once, carry survivors and the incumbent best forward.
class SearchInstance {
 public:
  // conjecture-driven search with counterexample certification
  SearchInstance(int n, int conjecture_id, GenerationConfig cfg,
                 std::uint64_t net_seed, std::uint64_t rng_seed);
  // custom reward (certification disabled)
  SearchInstance(int n, RewardFn scorer, GenerationConfig cfg,
                 std::uint64_t net_seed, std::uint64_t rng_seed);

  // One generation. On numeric failure the instance is left at its
  // pre-generation state and the error propagates.
  GenerationStats run_generation();

  // Resume support: install a known graph as incumbent and survivor, so the
  // next generation seeds from it and re-scores it.
  void plant_incumbent(const Graph& g);

  int vertex_count() const { return n_; }
  int generation() const { return generation_; }
  double global_best_reward() const;
  const std::optional<RolloutRecord>& incumbent() const { return incumbent_; }
  const std::vector<CounterexampleRecord>& counterexamples() const { return finds_; }
  const GenerationConfig& config() const { return cfg_; }
  PolicyNetwork& network() { return net_; }

 private:
  GenerationStats run_generation_impl();

  int n_;
  std::optional<int> conjecture_id_;
  RewardFn scorer_;
  GenerationConfig cfg_;
  PolicyNetwork net_;
  Rng rng_;
  int generation_ = 0;
  std::vector<RolloutRecord> survivors_;
  std::optional<RolloutRecord> incumbent_;
  std::vector<CounterexampleRecord> finds_;
};

// ---- implementation of the rollout template ------------------------------

template <typename ActionFn>
RolloutResult rollout_with(int n, std::vector<std::uint8_t> initial_bits, ActionFn&& act) {
  const int slots = edge_slot_count(n);
  RolloutState state = make_rollout_state(std::move(initial_bits));
  if (static_cast<int>(state.edge_bits.size()) != slots)
    throw shape_error("rollout: initial bits length != n(n-1)/2");

  RolloutResult out;
  out.actions.reserve(slots);

  // observation buffer maintained incrementally: only the toggled bit and the
  // moving one-hot cell change between steps
  std::vector<double> obs(2 * static_cast<std::size_t>(slots), 0.0);
  for (int k = 0; k < slots; ++k) obs[k] = state.edge_bits[k];

  for (int pos = 0; pos < slots; ++pos) {
    obs[slots + pos] = 1.0;
    const bool action = act(std::as_const(obs), pos);
    apply_action(state, action);
    obs[pos] = state.edge_bits[pos];
    obs[slots + pos] = 0.0;
    out.actions.push_back(action ? 1 : 0);
  }
  out.graph = graph_from_bits(n, std::move(state.edge_bits));
  return out;
}

}  // namespace lapspec
