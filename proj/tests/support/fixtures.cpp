#include "fixtures.hpp"

#include "lapspec/errors.hpp"

namespace fixtures {

namespace {

const char* kGraph2Text = R"([[0 0 0 1 1 0 0 0 1 0 0 0]
 [0 0 1 1 0 0 0 0 1 0 1 0]
 [0 1 0 0 0 1 0 1 0 0 0 1]
 [1 1 0 0 0 0 0 1 0 0 0 1]
 [1 0 0 0 0 0 1 1 0 0 0 0]
 [0 0 1 0 0 0 0 0 1 1 0 0]
 [0 0 0 0 1 0 0 0 0 1 1 0]
 [0 0 1 1 1 0 0 0 0 0 1 0]
 [1 1 0 0 0 1 0 0 0 0 0 0]
 [0 0 0 0 0 1 1 0 0 0 0 1]
 [0 1 0 0 0 0 1 1 0 0 0 1]
 [0 0 1 1 0 0 0 0 0 1 1 0]])";

const char* kGraph66Text = R"([[0 0 1 0 1 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0]
 [0 0 1 0 0 0 0 1 1 0 0 0 0 0 0 0 1 0 0 0]
 [1 1 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0]
 [0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 1]
 [1 0 0 0 0 1 0 0 0 0 0 0 1 0 0 0 0 0 0 0]
 [0 0 0 0 1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0]
 [0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 1 0]
 [1 1 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 1 0]
 [0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 0 0 0 0]
 [0 0 0 0 0 1 0 0 0 0 0 0 0 0 1 0 0 0 0 0]
 [0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0]
 [1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0]
 [0 0 0 0 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 1]
 [0 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 0]
 [0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 1 0 0 0]
 [0 0 0 0 0 0 0 1 1 0 0 1 0 0 0 0 1 0 0 0]
 [0 1 0 0 0 0 0 0 0 0 0 0 0 0 1 1 0 0 0 0]
 [0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 0]
 [0 0 0 0 0 0 1 1 0 0 0 0 0 0 0 0 0 1 0 0]
 [0 0 0 1 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0]])";

const char* kGraph41Text = R"([[0 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1]
 [1 0 0 1 0 0 0 1 0 0 0 0 0 1 0 0 0 0 0 0]
 [1 0 0 0 0 0 1 0 0 0 0 0 1 0 1 0 0 0 0 0]
 [1 1 0 0 0 1 0 0 0 0 0 0 0 0 1 0 0 0 0 0]
 [1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 1 0 1 0]
 [1 0 0 1 1 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0]
 [1 0 1 0 0 0 0 0 0 0 0 0 0 0 1 0 1 1 0 0]
 [1 1 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 1 0]
 [1 0 0 0 0 0 0 1 0 0 0 0 0 1 0 0 0 1 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 0 0 0 1]
 [1 0 0 0 0 0 0 0 0 0 0 1 0 0 0 1 0 0 0 1]
 [1 0 0 0 0 0 0 0 0 0 1 0 0 0 0 1 0 0 1 0]
 [1 0 1 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0 0 0]
 [1 1 0 0 0 0 0 0 1 0 0 0 0 0 0 0 1 0 0 0]
 [1 0 1 1 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 1 1 1 0 0 0 0 0 0 0 0]
 [1 0 0 0 1 0 1 0 0 0 0 0 0 1 0 0 0 0 0 0]
 [1 0 0 0 0 0 1 0 1 0 0 0 0 0 0 0 0 0 0 1]
 [1 0 0 0 1 0 0 1 0 0 0 1 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 1 1 0 0 0 0 0 0 1 0 0]])";

const char* kGraph65Text = R"([[0 0 0 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1]
 [0 0 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [0 1 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0]
 [1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0]])";

}  // namespace

const char* graph2_text() { return kGraph2Text; }
const char* graph66_text() { return kGraph66Text; }
const char* graph41_text() { return kGraph41Text; }
const char* graph65_text() { return kGraph65Text; }

lapspec::Graph graph2() { return lapspec::from_adjacency_text(kGraph2Text); }
lapspec::Graph graph66() { return lapspec::from_adjacency_text(kGraph66Text); }
lapspec::Graph graph41() { return lapspec::from_adjacency_text(kGraph41Text); }
lapspec::Graph graph65() { return lapspec::from_adjacency_text(kGraph65Text); }

const std::vector<int>& graph2_violations() {
  static const std::vector<int> v = {2,  3,  15, 28, 29, 31, 32, 36, 43, 49, 52, 53,
                                     54, 55, 57, 58, 59, 60, 61, 62, 63, 64, 67};
  return v;
}
const std::vector<int>& graph66_violations() {
  static const std::vector<int> v = {3,  15, 28, 29, 31, 32, 36, 43, 49, 52, 53,
                                     54, 55, 57, 58, 59, 60, 61, 62, 63, 64, 66};
  return v;
}
const std::vector<int>& graph41_violations() {
  static const std::vector<int> v = {41, 43, 49, 51, 52, 53, 54, 55, 57, 58};
  return v;
}
const std::vector<int>& graph65_violations() {
  static const std::vector<int> v = {65, 68};
  return v;
}

lapspec::Graph path(int n) {
  lapspec::Graph g = lapspec::empty_graph(n);
  for (int i = 0; i + 1 < n; ++i) g.edge_bits[lapspec::edge_slot(n, i, i + 1)] = 1;
  return g;
}

lapspec::Graph star(int n) {
  lapspec::Graph g = lapspec::empty_graph(n);
  for (int i = 1; i < n; ++i) g.edge_bits[lapspec::edge_slot(n, 0, i)] = 1;
  return g;
}

lapspec::Graph cycle(int n) {
  lapspec::Graph g = path(n);
  if (n >= 3) g.edge_bits[lapspec::edge_slot(n, 0, n - 1)] = 1;
  return g;
}

lapspec::Graph two_k2() {
  lapspec::Graph g = lapspec::empty_graph(4);
  g.edge_bits[lapspec::edge_slot(4, 0, 1)] = 1;
  g.edge_bits[lapspec::edge_slot(4, 2, 3)] = 1;
  return g;
}

}  // namespace fixtures
