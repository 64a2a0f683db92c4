#include "lapspec/ce_engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lapspec/errors.hpp"

namespace lapspec {

RolloutState make_rollout_state(std::vector<std::uint8_t> initial_bits) {
  RolloutState s;
  s.edge_bits = std::move(initial_bits);
  for (auto& b : s.edge_bits) b = b ? 1 : 0;
  s.position = 0;
  s.done = s.edge_bits.empty();
  return s;
}

std::vector<double> build_observation(const RolloutState& state) {
  if (state.done) throw lifecycle_error("build_observation: rollout already finished");
  const std::size_t slots = state.edge_bits.size();
  std::vector<double> obs(2 * slots, 0.0);
  for (std::size_t k = 0; k < slots; ++k) obs[k] = state.edge_bits[k];
  obs[slots + static_cast<std::size_t>(state.position)] = 1.0;
  return obs;
}

void apply_action(RolloutState& state, bool action) {
  if (state.done) throw lifecycle_error("apply_action: rollout already finished");
  if (action) state.edge_bits[state.position] ^= 1;
  ++state.position;
  if (state.position == static_cast<int>(state.edge_bits.size())) state.done = true;
}

RolloutResult rollout(const PolicyNetwork& net, int n,
                      std::vector<std::uint8_t> initial_bits, bool epsilon_random,
                      Rng& rng) {
  if (epsilon_random)
    return rollout_with(n, std::move(initial_bits),
                        [&rng](const std::vector<double>&, int) { return rng.bernoulli(0.5); });
  return rollout_with(n, std::move(initial_bits),
                      [&net, &rng](const std::vector<double>& obs, int) {
                        const auto p = net.forward(obs);
                        return rng.bernoulli(p[1]);
                      });
}

void append_training_pairs(const RolloutRecord& rec, TrainBatch& batch) {
  RolloutState state = make_rollout_state(rec.initial_bits);
  for (std::uint8_t action : rec.actions) {
    batch.observations.push_back(build_observation(state));
    batch.actions.push_back(action);
    apply_action(state, action != 0);
  }
}

namespace {

int ceil_count(double frac, int batch) {
  return static_cast<int>(std::ceil(frac * static_cast<double>(batch)));
}

}  // namespace

void validate(const GenerationConfig& cfg, int n) {
  if (n < 2) throw config_error("n: must be >= 2");
  if (cfg.batch_size < 1) throw config_error("batch_size: must be >= 1");
  if (!(cfg.elite_survive_frac > 0.0))
    throw config_error("elite_survive_frac: must be > 0");
  if (cfg.elite_survive_frac > cfg.elite_learn_frac)
    throw config_error("elite_survive_frac: must be <= elite_learn_frac");
  if (!(cfg.elite_learn_frac < 1.0))
    throw config_error("elite_learn_frac: must be < 1");
  if (cfg.seed_fraction < 0.0 || cfg.seed_fraction > 1.0)
    throw config_error("seed_fraction: must be in [0, 1]");
  if (cfg.epsilon_random_frac < 0.0 || cfg.epsilon_random_frac > 1.0)
    throw config_error("epsilon_random_frac: must be in [0, 1]");
  if (cfg.learning_rate < 0.0) throw config_error("learning_rate: must be >= 0");
  if (cfg.strict_tol <= 0.0) throw config_error("strict_tol: must be > 0");
  if (cfg.eig_tol <= 0.0) throw config_error("eig_tol: must be > 0");
  for (int h : cfg.hidden_sizes)
    if (h < 1) throw config_error("hidden_sizes: entries must be >= 1");
  const int reserved =
      ceil_count(cfg.seed_fraction, cfg.batch_size) +
      ceil_count(cfg.epsilon_random_frac, cfg.batch_size);
  if (reserved > cfg.batch_size)
    throw config_error(
        "seed_fraction/epsilon_random_frac: seeded plus random rollouts exceed "
        "batch_size");
}

BatchPlan plan_batch(const GenerationConfig& cfg, bool has_incumbent) {
  BatchPlan plan;
  plan.seeded = has_incumbent ? ceil_count(cfg.seed_fraction, cfg.batch_size) : 0;
  plan.random = ceil_count(cfg.epsilon_random_frac, cfg.batch_size);
  plan.zero = cfg.batch_size - plan.seeded - plan.random;
  return plan;
}

EliteSelection select_elites(const std::vector<double>& rewards,
                             const GenerationConfig& cfg) {
  if (rewards.empty()) throw shape_error("select_elites: empty population");
  std::vector<int> order(rewards.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rewards[a] > rewards[b]; });

  const int population = static_cast<int>(rewards.size());
  const int learn_count =
      std::min(population, ceil_count(cfg.elite_learn_frac, cfg.batch_size));
  const int survive_count =
      std::min(population, ceil_count(cfg.elite_survive_frac, cfg.batch_size));

  EliteSelection sel;
  sel.learn.assign(order.begin(), order.begin() + learn_count);
  sel.survivors.assign(order.begin(), order.begin() + survive_count);
  return sel;
}

SearchInstance::SearchInstance(int n, int conjecture_id, GenerationConfig cfg,
                               std::uint64_t net_seed, std::uint64_t rng_seed)
    : n_(n),
      conjecture_id_(conjecture_id),
      cfg_(std::move(cfg)),
      net_(architecture_for_vertices(n, cfg_.hidden_sizes), net_seed),
      rng_(rng_seed) {
  validate(cfg_, n_);
  conjecture_info(conjecture_id);  // throws on unknown id
  const double tol = cfg_.eig_tol;
  scorer_ = [conjecture_id, tol](const Graph& g) { return reward(conjecture_id, g, tol); };
}

SearchInstance::SearchInstance(int n, RewardFn scorer, GenerationConfig cfg,
                               std::uint64_t net_seed, std::uint64_t rng_seed)
    : n_(n),
      scorer_(std::move(scorer)),
      cfg_(std::move(cfg)),
      net_(architecture_for_vertices(n, cfg_.hidden_sizes), net_seed),
      rng_(rng_seed) {
  validate(cfg_, n_);
  if (!scorer_) throw config_error("scorer: must be callable");
}

double SearchInstance::global_best_reward() const {
  return incumbent_ ? incumbent_->reward
                    : -std::numeric_limits<double>::infinity();
}

void SearchInstance::plant_incumbent(const Graph& g) {
  if (g.n != n_) throw shape_error("plant_incumbent: vertex count mismatch");
  RolloutRecord rec;
  rec.graph = g;
  rec.reward = scorer_(g);
  rec.initial_bits = g.edge_bits;
  rec.actions.assign(g.edge_bits.size(), 0);
  if (!incumbent_ || rec.reward > incumbent_->reward) incumbent_ = rec;
  survivors_.push_back(std::move(rec));
}

GenerationStats SearchInstance::run_generation() {
  const Rng saved_rng = rng_;
  try {
    return run_generation_impl();
  } catch (...) {
    // a failed generation must leave the instance at its pre-generation
    // state; nothing else is mutated before the commit point below
    rng_ = saved_rng;
    throw;
  }
}

GenerationStats SearchInstance::run_generation_impl() {
  const auto start = std::chrono::steady_clock::now();
  const int slots = edge_slot_count(n_);

  // no seeding before an incumbent exists (generation 0 of a fresh search)
  const BatchPlan plan = plan_batch(cfg_, incumbent_.has_value());

  // population: survivors first, then incumbent-seeded, random, zero-started
  std::vector<RolloutRecord> population;
  population.reserve(survivors_.size() + cfg_.batch_size);
  for (const RolloutRecord& s : survivors_) population.push_back(s);

  const std::vector<std::uint8_t> zero_bits(slots, 0);
  auto roll = [&](const std::vector<std::uint8_t>& init, bool epsilon) {
    RolloutResult r = rollout(net_, n_, init, epsilon, rng_);
    RolloutRecord rec;
    rec.graph = std::move(r.graph);
    rec.initial_bits = init;
    rec.actions = std::move(r.actions);
    rec.reward = scorer_(rec.graph);
    population.push_back(std::move(rec));
  };

  for (int k = 0; k < plan.seeded; ++k) roll(incumbent_->graph.edge_bits, false);
  for (int k = 0; k < plan.random; ++k) roll(zero_bits, true);
  for (int k = 0; k < plan.zero; ++k) roll(zero_bits, false);

  std::vector<double> rewards(population.size());
  for (std::size_t i = 0; i < population.size(); ++i) rewards[i] = population[i].reward;
  const EliteSelection sel = select_elites(rewards, cfg_);

  const RolloutRecord& best = population[sel.learn.front()];
  double reward_sum = 0.0;
  for (double r : rewards) reward_sum += r;

  // certification before training so a halt captures the find even if the
  // training step fails; every above-threshold member gets a chance, so an
  // uncertifiable leader (clamped argmax) cannot mask a certifiable runner-up
  std::vector<CounterexampleRecord> certified_now;
  if (conjecture_id_) {
    for (int idx : sel.learn) {
      if (!(population[idx].reward > cfg_.strict_tol)) break;  // ranked order
      const VerifyOutcome outcome =
          verify_counterexample(population[idx].graph, *conjecture_id_, cfg_.strict_tol);
      if (outcome.certified) certified_now.push_back(outcome.record);
    }
  }

  TrainBatch batch;
  for (int idx : sel.learn) append_training_pairs(population[idx], batch);
  net_.train_step(batch, cfg_.learning_rate);

  // commit point: everything below is non-throwing bookkeeping
  bool found_new = false;
  for (const CounterexampleRecord& rec : certified_now) {
    const bool already_known =
        std::any_of(finds_.begin(), finds_.end(), [&](const CounterexampleRecord& r) {
          return r.conjecture_id == rec.conjecture_id &&
                 r.graph.edge_bits == rec.graph.edge_bits;
        });
    if (!already_known) {
      finds_.push_back(rec);
      found_new = true;
    }
  }

  std::vector<RolloutRecord> next_survivors;
  next_survivors.reserve(sel.survivors.size());
  for (int idx : sel.survivors) next_survivors.push_back(population[idx]);
  survivors_ = std::move(next_survivors);

  if (!incumbent_ || best.reward > incumbent_->reward) incumbent_ = best;

  GenerationStats stats;
  stats.generation = generation_;
  stats.best_reward = best.reward;
  stats.mean_reward = reward_sum / static_cast<double>(population.size());
  stats.global_best_reward = incumbent_->reward;
  stats.edges_in_best = edge_count(incumbent_->graph);
  stats.counterexample_found = found_new;
  stats.wall_us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  ++generation_;
  return stats;
}

}  // namespace lapspec
