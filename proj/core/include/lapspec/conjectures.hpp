#pragma once

#include <string>
#include <vector>

#include "lapspec/graph.hpp"
#include "lapspec/spectral.hpp"

namespace lapspec {

enum class BoundForm { vertex_max, edge_max };

// One conjectured upper bound on the Laplacian spectral radius, written in
// terms of vertex degrees d and neighbour-average degrees m. vertex_max
// bounds maximize over vertices, edge_max bounds over adjacent pairs.
struct ConjectureInfo {
  int id;
  BoundForm form;
  const char* formula;
};

// All 28 catalog entries, ascending by id.
const std::vector<ConjectureInfo>& conjecture_catalog();
bool is_conjecture_id(int id);
const ConjectureInfo& conjecture_info(int id);  // throws config_error on unknown id
std::string valid_conjecture_ids();             // "2, 3, 15, ..." for error messages

struct BoundResult {
  double value;
  int witness_v;              // vertex (or first endpoint) achieving the max
  int witness_j;              // second endpoint for edge_max, -1 otherwise
  bool clamped_at_argmax;     // a radicand was clamped to 0 at the maximizer
  bool clamped_anywhere;
};

// Maximum of the conjecture's formula over its domain. Negative radicands are
// clamped to 0 and flagged. Throws std::domain_error on disconnected input
// (and on edge_max bounds for edgeless graphs).
BoundResult bound_value(int id, const Graph& g);

struct EvaluationReport {
  int id = 0;
  double bound = 0.0;
  double mu = 0.0;
  double margin = 0.0;  // mu - bound
  int witness_v = -1;
  int witness_j = -1;
  bool clamped_at_argmax = false;
  bool clamped_anywhere = false;
  double residual = 0.0;
};
EvaluationReport evaluate_conjecture(int id, const Graph& g, double eig_tol = 1e-10);

// Search reward: mu - bound for connected graphs, otherwise the graded
// penalty -(n + component_count), which sits strictly below every connected
// reward of interest at the same n.
double reward(int id, const Graph& g, double eig_tol = 1e-10);

struct CounterexampleRecord {
  Graph graph;
  int conjecture_id = 0;
  double mu = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  double residual = 0.0;
};

struct VerifyOutcome {
  bool certified = false;
  CounterexampleRecord record;  // valid only when certified
  EvaluationReport report;      // diagnostics, always filled
  std::string reason;           // rejection cause, empty when certified
};

// Certify a candidate: recompute mu at eigensolver tolerance 1e-12 and
// require margin > strict_tol, connectivity, and an unclamped argmax.
VerifyOutcome verify_counterexample(const Graph& g, int id, double strict_tol = 1e-6);

// Exportable certificate block (id, n, adjacency text, graph6, mu, bound,
// margin); parse_counterexample reads the same block back.
std::string format_counterexample(const CounterexampleRecord& rec);
CounterexampleRecord parse_counterexample(const std::string& text);

}  // namespace lapspec
