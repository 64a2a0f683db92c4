#include "lapspec/graph.hpp"

#include <algorithm>
#include <sstream>

#include "lapspec/errors.hpp"

namespace lapspec {

std::pair<int, int> edge_pair(int n, int slot) {
  int i = 0;
  int row_len = n - 1;
  while (slot >= row_len) {
    slot -= row_len;
    --row_len;
    ++i;
  }
  return {i, i + 1 + slot};
}

Graph graph_from_bits(int n, std::vector<std::uint8_t> bits) {
  if (n < 1) throw shape_error("graph_from_bits: vertex count must be >= 1");
  if (static_cast<int>(bits.size()) != edge_slot_count(n))
    throw shape_error("graph_from_bits: expected " +
                      std::to_string(edge_slot_count(n)) + " edge bits for n=" +
                      std::to_string(n) + ", got " + std::to_string(bits.size()));
  for (auto& b : bits) b = b ? 1 : 0;
  return Graph{n, std::move(bits)};
}

Graph empty_graph(int n) {
  return graph_from_bits(n, std::vector<std::uint8_t>(edge_slot_count(n), 0));
}

Graph complete_graph(int n) {
  return graph_from_bits(n, std::vector<std::uint8_t>(edge_slot_count(n), 1));
}

bool has_edge(const Graph& g, int i, int j) {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return g.edge_bits[edge_slot(g.n, i, j)] != 0;
}

int edge_count(const Graph& g) {
  int c = 0;
  for (auto b : g.edge_bits) c += b;
  return c;
}

Graph relabeled(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.n)
    throw shape_error("relabeled: permutation length != n");
  Graph out = empty_graph(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (has_edge(g, perm[i], perm[j])) out.edge_bits[edge_slot(g.n, i, j)] = 1;
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degree.assign(g.n, 0);
  for (int k = 0; k < static_cast<int>(g.edge_bits.size()); ++k) {
    if (!g.edge_bits[k]) continue;
    auto [i, j] = edge_pair(g.n, k);
    ++p.degree[i];
    ++p.degree[j];
  }
  p.neighbor_avg.assign(g.n, 0.0);
  std::vector<double> deg_sum(g.n, 0.0);
  for (int k = 0; k < static_cast<int>(g.edge_bits.size()); ++k) {
    if (!g.edge_bits[k]) continue;
    auto [i, j] = edge_pair(g.n, k);
    deg_sum[i] += p.degree[j];
    deg_sum[j] += p.degree[i];
  }
  for (int v = 0; v < g.n; ++v)
    if (p.degree[v] > 0) p.neighbor_avg[v] = deg_sum[v] / p.degree[v];
  return p;
}

namespace {

// BFS component labels; returns number of components
int label_components(const Graph& g, std::vector<int>& label) {
  label.assign(g.n, -1);
  std::vector<int> queue;
  int components = 0;
  for (int s = 0; s < g.n; ++s) {
    if (label[s] >= 0) continue;
    label[s] = components;
    queue.assign(1, s);
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (int u = 0; u < g.n; ++u) {
        if (label[u] < 0 && has_edge(g, v, u)) {
          label[u] = components;
          queue.push_back(u);
        }
      }
    }
    ++components;
  }
  return components;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::vector<int> label;
  return label_components(g, label) == 1;
}

int component_count(const Graph& g) {
  std::vector<int> label;
  return label_components(g, label);
}

std::vector<double> laplacian_matrix(const Graph& g) {
  const int n = g.n;
  std::vector<double> lap(static_cast<std::size_t>(n) * n, 0.0);
  for (int k = 0; k < static_cast<int>(g.edge_bits.size()); ++k) {
    if (!g.edge_bits[k]) continue;
    auto [i, j] = edge_pair(n, k);
    lap[static_cast<std::size_t>(i) * n + j] = -1.0;
    lap[static_cast<std::size_t>(j) * n + i] = -1.0;
    lap[static_cast<std::size_t>(i) * n + i] += 1.0;
    lap[static_cast<std::size_t>(j) * n + j] += 1.0;
  }
  return lap;
}

std::string to_adjacency_text(const Graph& g) {
  std::string out;
  for (int i = 0; i < g.n; ++i) {
    out += (i == 0) ? "[[" : " [";
    for (int j = 0; j < g.n; ++j) {
      if (j) out += ' ';
      out += (i != j && has_edge(g, i, j)) ? '1' : '0';
    }
    out += (i == g.n - 1) ? "]]" : "]\n";
  }
  return out;
}

Graph from_adjacency_text(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string cleaned;
    cleaned.reserve(line.size());
    for (char c : line) {
      if (c == '[' || c == ']' || c == ',') c = ' ';
      cleaned += c;
    }
    std::istringstream ls(cleaned);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      if (tok == "0" || tok == "1")
        row.push_back(tok[0] - '0');
      else
        throw parse_error("adjacency text: row " + std::to_string(rows.size() + 1) +
                          ": expected 0/1, got '" + tok + "'");
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("adjacency text: no rows");
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw parse_error("adjacency text: row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(n));
    if (rows[i][i] != 0)
      throw parse_error("adjacency text: row " + std::to_string(i + 1) +
                        ": nonzero diagonal entry");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rows[i][j] != rows[j][i])
        throw parse_error("adjacency text: row " + std::to_string(j + 1) +
                          ": asymmetric at column " + std::to_string(i + 1));
  Graph g = empty_graph(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rows[i][j]) g.edge_bits[edge_slot(n, i, j)] = 1;
  return g;
}

// graph6 packs the upper triangle column-by-column: for j = 1..n-1 the bits
// (0,j),(1,j),...,(j-1,j), padded with zeros to a multiple of 6, each 6-bit
// group offset by 63 into a printable byte.
std::string to_graph6(const Graph& g) {
  if (g.n > 62)
    throw shape_error("to_graph6: only the short form (n <= 62) is supported");
  std::string out;
  out += static_cast<char>(g.n + 63);
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (has_edge(g, i, j) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out += static_cast<char>((acc << (6 - nbits)) + 63);
  return out;
}

Graph from_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw parse_error("graph6: empty input");
  const int n = static_cast<unsigned char>(s[0]) - 63;
  if (n < 0 || n > 62)
    throw parse_error("graph6: byte 1: unsupported vertex-count byte");
  const int bits_needed = edge_slot_count(n);
  const int bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<int>(s.size()) != 1 + bytes_needed)
    throw parse_error("graph6: length mismatch: expected " +
                      std::to_string(1 + bytes_needed) + " bytes for n=" +
                      std::to_string(n) + ", got " + std::to_string(s.size()));
  Graph g = empty_graph(std::max(n, 1));
  if (n == 0) throw parse_error("graph6: byte 1: zero-vertex graph not supported");
  int bit_index = 0;
  int i = 0, j = 1;
  for (int b = 0; b < bytes_needed; ++b) {
    const int raw = static_cast<unsigned char>(s[1 + b]) - 63;
    if (raw < 0 || raw > 63)
      throw parse_error("graph6: byte " + std::to_string(b + 2) +
                        ": value out of range");
    for (int k = 5; k >= 0; --k, ++bit_index) {
      const int bit = (raw >> k) & 1;
      if (bit_index >= bits_needed) {
        if (bit)
          throw parse_error("graph6: byte " + std::to_string(b + 2) +
                            ": nonzero padding bit");
        continue;
      }
      if (bit) g.edge_bits[edge_slot(n, i, j)] = 1;
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return g;
}

}  // namespace lapspec
