#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lapspec {

// Undirected simple graph stored as the strict upper triangle of its
// adjacency matrix in row-wise order:
//   slot k <-> pair (i,j), i<j, enumerated (0,1),(0,2),...,(0,n-1),(1,2),...
// Rollout observations and the graph6 codec both key off this slot order.
struct Graph {
  int n = 0;
  std::vector<std::uint8_t> edge_bits;  // length n(n-1)/2, values 0/1
};

constexpr int edge_slot_count(int n) { return n * (n - 1) / 2; }

// slot index of pair (i,j), i < j
constexpr int edge_slot(int n, int i, int j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<int, int> edge_pair(int n, int slot);

// throws shape_error unless bits.size() == n(n-1)/2 and n >= 1
Graph graph_from_bits(int n, std::vector<std::uint8_t> bits);

Graph empty_graph(int n);
Graph complete_graph(int n);

bool has_edge(const Graph& g, int i, int j);
int edge_count(const Graph& g);

// relabeling: vertex v of the result is vertex perm[v] of g
Graph relabeled(const Graph& g, const std::vector<int>& perm);

// Per-vertex degree d_v and average degree of neighbours m_v. Isolated
// vertices get m_v = 0; the conjecture layer rejects disconnected graphs
// before any formula sees such a value.
struct DegreeProfile {
  std::vector<int> degree;
  std::vector<double> neighbor_avg;
};
DegreeProfile degree_profile(const Graph& g);

bool is_connected(const Graph& g);
int component_count(const Graph& g);

// row-major n*n Laplacian D - A
std::vector<double> laplacian_matrix(const Graph& g);

// Bracketed 0/1 rows, e.g. "[[0 1]\n [1 0]]". Parsing accepts arbitrary
// leading indentation per row; ragged rows, asymmetry and nonzero diagonal
// are parse errors naming the offending row.
std::string to_adjacency_text(const Graph& g);
Graph from_adjacency_text(const std::string& text);

// Standard graph6 (short form, n <= 62).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

}  // namespace lapspec
