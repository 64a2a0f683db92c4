#include "lapspec/conjectures.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lapspec/errors.hpp"

namespace lapspec {

namespace {

// square root with the catalog's clamp rule: negative radicands evaluate as 0
// and raise the clamp flag
double sqrt0(double x, bool& clamped) {
  if (x < 0.0) {
    clamped = true;
    return 0.0;
  }
  return std::sqrt(x);
}

using VertexFn = double (*)(double d, double m, bool& clamped);
using EdgeFn = double (*)(double dv, double mv, double dj, double mj, bool& clamped);

struct Entry {
  int id;
  BoundForm form;
  const char* formula;
  VertexFn vertex = nullptr;
  EdgeFn edge = nullptr;
};

double c2(double d, double m, bool&) { return 2.0 * m * m / d; }
double c3(double d, double m, bool&) { return m * m / d + m; }
double c15(double d, double m, bool& cl) { return sqrt0(4.0 * m * m * m / d, cl); }
// printed with a leading 4 in the thesis, which contradicts its own
// counterexample table; coefficient 2 restores both the table and the
// family's tightness (= 2m) on regular graphs
double c28(double d, double m, bool& cl) {
  return sqrt0(2.0 * (m * m) * (m * m) / (d * d) + 2.0 * d * m, cl);
}
double c29(double d, double m, bool& cl) { return sqrt0(m * m + 3.0 * m * m * m / d, cl); }
double c31(double d, double m, bool&) { return 4.0 * m * m / (m + d); }
double c32(double d, double m, bool& cl) { return sqrt0(m * m * m * (m + 3.0 * d), cl) / d; }

double c36(double dv, double mv, double dj, double mj, bool&) {
  return 2.0 * (mv * mv + mj * mj) / (dv + dj);
}
double c41(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + (mv + mj) - (dv + dj) +
         sqrt0(2.0 * (dv * dv + dj * dj) - 4.0 * (mv + mj) + 4.0, cl);
}
double c43(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + sqrt0(3.0 * (mv * mv + mj * mj) - 2.0 * mv * mj - 4.0 * (dv + dj) + 4.0, cl);
}
double c49(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + sqrt0(2.0 * (mv * mv + mj * mj) + (dv - dj) * (dv - dj) -
                         4.0 * (dv + dj) + 4.0,
                     cl);
}
double c51(double dv, double mv, double dj, double mj, bool&) {
  return 2.0 * (mv + mj) - 4.0 * mv * mj / (dv + dj);
}
double c52(double dv, double mv, double dj, double mj, bool& cl) {
  const double inner =
      sqrt0(8.0 * (mv * mv * mv * mv + mj * mj * mj * mj) - 8.0 * (dv * dv + dj * dj) + 4.0, cl);
  return 2.0 + sqrt0(inner - 4.0 * (dv + dj) + 6.0, cl);
}
double c53(double dv, double mv, double dj, double mj, bool& cl) {
  const double inner =
      sqrt0(8.0 * (mv * mv * mv * mv + mj * mj * mj * mj) - 8.0 * (dv * mv + dj * mj) + 4.0, cl);
  return 2.0 + sqrt0(inner - 4.0 * (dv + dj) + 6.0, cl);
}
double c54(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + sqrt0(2.0 * (mv * mv + mj * mj) + (dv * mv + dj * mj) -
                         (dv * dv + dj * dj) - 4.0 * (dv + dj) + 4.0,
                     cl);
}
double c55(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + sqrt0(3.0 * (mv * mv + mj * mj) - (dv * dv + dj * dj) -
                         4.0 * (mv + mj) + 4.0,
                     cl);
}
double c57(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + sqrt0(2.0 * (mv * mv + mj * mj) - 8.0 * (dv * dv + dj * dj) / (mv + mj) + 4.0, cl);
}
double c58(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + sqrt0(2.0 * (mv * mv + mv * mj + mj * mj) - (dv * mv + dj * mj) -
                         4.0 * (dv + dj) + 4.0,
                     cl);
}
double c59(double dv, double mv, double dj, double mj, bool&) {
  return (2.0 * (mv * mv + mv * mj + mj * mj) - (dv * dv + dj * dj)) / (mv + mj);
}
double c60(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + sqrt0(2.0 * (mv * mv + mv * mj + mj * mj) - (dv * dv + dj * dj) -
                         4.0 * (dv + dj) + 4.0,
                     cl);
}
double c61(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 * (mv * mv + mj * mj) /
         (2.0 + sqrt0(2.0 * ((dv - 1.0) * (dv - 1.0) + (dj - 1.0) * (dj - 1.0)), cl));
}
double c62(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + sqrt0(mv * mv + 4.0 * mv * mj + mj * mj - 2.0 * dv * dj -
                         4.0 * (dv + dj) + 4.0,
                     cl);
}
double c63(double dv, double mv, double dj, double mj, bool&) {
  return dv + dj + mv + mj - 4.0 * dv * dj / (mv + mj);
}
double c64(double dv, double mv, double dj, double mj, bool&) {
  return mv * mj * (dv + dj) / (dv * dj);
}
double c65(double dv, double mv, double dj, double mj, bool&) {
  return (mv + mj) * (dv * mv + dj * mj) / (2.0 * mv * mj);
}
double c66(double dv, double mv, double dj, double mj, bool&) {
  return (mv * mv + 4.0 * mv * mj + mj * mj - (dv * mv + dj * mj)) / (dv + dj);
}
double c67(double dv, double mv, double dj, double mj, bool&) {
  return (mv + mj) * (dv * mv + dj * mj) / (2.0 * dv * dj);
}
double c68(double dv, double mv, double dj, double mj, bool& cl) {
  return 2.0 + sqrt0((mv - mj) * (mv - mj) + 4.0 * dv * dj - 4.0 * (mv + mj) + 4.0, cl);
}

const Entry kCatalog[] = {
    {2, BoundForm::vertex_max, "max_v 2 m_v^2 / d_v", c2, nullptr},
    {3, BoundForm::vertex_max, "max_v m_v^2 / d_v + m_v", c3, nullptr},
    {15, BoundForm::vertex_max, "max_v sqrt(4 m_v^3 / d_v)", c15, nullptr},
    {28, BoundForm::vertex_max, "max_v sqrt(2 m_v^4 / d_v^2 + 2 d_v m_v)", c28, nullptr},
    {29, BoundForm::vertex_max, "max_v sqrt(m_v^2 + 3 m_v^3 / d_v)", c29, nullptr},
    {31, BoundForm::vertex_max, "max_v 4 m_v^2 / (m_v + d_v)", c31, nullptr},
    {32, BoundForm::vertex_max, "max_v sqrt(m_v^3 (m_v + 3 d_v)) / d_v", c32, nullptr},
    {36, BoundForm::edge_max, "max_{v~j} 2 (m_v^2 + m_j^2) / (d_v + d_j)", nullptr, c36},
    {41, BoundForm::edge_max,
     "max_{v~j} 2 + (m_v + m_j) - (d_v + d_j) + sqrt(2 (d_v^2 + d_j^2) - 4 (m_v + m_j) + 4)",
     nullptr, c41},
    {43, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(3 (m_v^2 + m_j^2) - 2 m_v m_j - 4 (d_v + d_j) + 4)", nullptr, c43},
    {49, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(2 (m_v^2 + m_j^2) + (d_v - d_j)^2 - 4 (d_v + d_j) + 4)", nullptr, c49},
    {51, BoundForm::edge_max, "max_{v~j} 2 (m_v + m_j) - 4 m_v m_j / (d_v + d_j)", nullptr, c51},
    {52, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(sqrt(8 (m_v^4 + m_j^4) - 8 (d_v^2 + d_j^2) + 4) - 4 (d_v + d_j) + 6)",
     nullptr, c52},
    {53, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(sqrt(8 (m_v^4 + m_j^4) - 8 (d_v m_v + d_j m_j) + 4) - 4 (d_v + d_j) + 6)",
     nullptr, c53},
    {54, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(2 (m_v^2 + m_j^2) + (d_v m_v + d_j m_j) - (d_v^2 + d_j^2) - 4 (d_v + d_j) + 4)",
     nullptr, c54},
    {55, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(3 (m_v^2 + m_j^2) - (d_v^2 + d_j^2) - 4 (m_v + m_j) + 4)", nullptr, c55},
    {57, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(2 (m_v^2 + m_j^2) - 8 (d_v^2 + d_j^2) / (m_v + m_j) + 4)", nullptr, c57},
    {58, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(2 (m_v^2 + m_v m_j + m_j^2) - (d_v m_v + d_j m_j) - 4 (d_v + d_j) + 4)",
     nullptr, c58},
    {59, BoundForm::edge_max,
     "max_{v~j} (2 (m_v^2 + m_v m_j + m_j^2) - (d_v^2 + d_j^2)) / (m_v + m_j)", nullptr, c59},
    {60, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(2 (m_v^2 + m_v m_j + m_j^2) - (d_v^2 + d_j^2) - 4 (d_v + d_j) + 4)",
     nullptr, c60},
    {61, BoundForm::edge_max,
     "max_{v~j} 2 (m_v^2 + m_j^2) / (2 + sqrt(2 ((d_v - 1)^2 + (d_j - 1)^2)))", nullptr, c61},
    {62, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt(m_v^2 + 4 m_v m_j + m_j^2 - 2 d_v d_j - 4 (d_v + d_j) + 4)", nullptr,
     c62},
    {63, BoundForm::edge_max, "max_{v~j} d_v + d_j + m_v + m_j - 4 d_v d_j / (m_v + m_j)",
     nullptr, c63},
    {64, BoundForm::edge_max, "max_{v~j} m_v m_j (d_v + d_j) / (d_v d_j)", nullptr, c64},
    {65, BoundForm::edge_max, "max_{v~j} (m_v + m_j)(d_v m_v + d_j m_j) / (2 m_v m_j)", nullptr,
     c65},
    {66, BoundForm::edge_max,
     "max_{v~j} (m_v^2 + 4 m_v m_j + m_j^2 - (d_v m_v + d_j m_j)) / (d_v + d_j)", nullptr, c66},
    {67, BoundForm::edge_max, "max_{v~j} (m_v + m_j)(d_v m_v + d_j m_j) / (2 d_v d_j)", nullptr,
     c67},
    {68, BoundForm::edge_max,
     "max_{v~j} 2 + sqrt((m_v - m_j)^2 + 4 d_v d_j - 4 (m_v + m_j) + 4)", nullptr, c68},
};

const Entry* find_entry(int id) {
  for (const Entry& e : kCatalog)
    if (e.id == id) return &e;
  return nullptr;
}

const Entry& entry_or_throw(int id) {
  const Entry* e = find_entry(id);
  if (!e)
    throw config_error("unknown conjecture id " + std::to_string(id) +
                       "; valid ids: " + valid_conjecture_ids());
  return *e;
}

}  // namespace

const std::vector<ConjectureInfo>& conjecture_catalog() {
  static const std::vector<ConjectureInfo> catalog = [] {
    std::vector<ConjectureInfo> v;
    for (const Entry& e : kCatalog) v.push_back({e.id, e.form, e.formula});
    return v;
  }();
  return catalog;
}

bool is_conjecture_id(int id) { return find_entry(id) != nullptr; }

const ConjectureInfo& conjecture_info(int id) {
  entry_or_throw(id);
  for (const ConjectureInfo& info : conjecture_catalog())
    if (info.id == id) return info;
  throw config_error("unreachable");
}

std::string valid_conjecture_ids() {
  std::string out;
  for (const Entry& e : kCatalog) {
    if (!out.empty()) out += ", ";
    out += std::to_string(e.id);
  }
  return out;
}

BoundResult bound_value(int id, const Graph& g) {
  const Entry& entry = entry_or_throw(id);
  if (!is_connected(g))
    throw std::domain_error("bound_value: conjecture " + std::to_string(id) +
                            " requires a connected graph");
  if (g.n < 2)
    throw std::domain_error("bound_value: conjecture bounds need n >= 2");

  const DegreeProfile prof = degree_profile(g);
  BoundResult best{-std::numeric_limits<double>::infinity(), -1, -1, false, false};

  if (entry.form == BoundForm::vertex_max) {
    for (int v = 0; v < g.n; ++v) {
      bool clamped = false;
      const double val =
          entry.vertex(static_cast<double>(prof.degree[v]), prof.neighbor_avg[v], clamped);
      best.clamped_anywhere |= clamped;
      if (val > best.value) {
        best.value = val;
        best.witness_v = v;
        best.witness_j = -1;
        best.clamped_at_argmax = clamped;
      }
    }
  } else {
    bool any_edge = false;
    for (int k = 0; k < static_cast<int>(g.edge_bits.size()); ++k) {
      if (!g.edge_bits[k]) continue;
      any_edge = true;
      auto [v, j] = edge_pair(g.n, k);
      bool clamped = false;
      const double val = entry.edge(static_cast<double>(prof.degree[v]), prof.neighbor_avg[v],
                                    static_cast<double>(prof.degree[j]), prof.neighbor_avg[j],
                                    clamped);
      best.clamped_anywhere |= clamped;
      if (val > best.value) {
        best.value = val;
        best.witness_v = v;
        best.witness_j = j;
        best.clamped_at_argmax = clamped;
      }
    }
    if (!any_edge)
      throw std::domain_error("bound_value: edge_max conjecture on an edgeless graph");
  }
  return best;
}

EvaluationReport evaluate_conjecture(int id, const Graph& g, double eig_tol) {
  const BoundResult b = bound_value(id, g);
  const SpectralResult s = laplacian_spectral_radius(g, eig_tol);
  EvaluationReport rep;
  rep.id = id;
  rep.bound = b.value;
  rep.mu = s.mu;
  rep.margin = s.mu - b.value;
  rep.witness_v = b.witness_v;
  rep.witness_j = b.witness_j;
  rep.clamped_at_argmax = b.clamped_at_argmax;
  rep.clamped_anywhere = b.clamped_anywhere;
  rep.residual = s.residual;
  return rep;
}

double reward(int id, const Graph& g, double eig_tol) {
  entry_or_throw(id);
  if (!is_connected(g))
    return -static_cast<double>(g.n + component_count(g));
  const BoundResult b = bound_value(id, g);
  const SpectralResult s = laplacian_spectral_radius(g, eig_tol);
  return s.mu - b.value;
}

VerifyOutcome verify_counterexample(const Graph& g, int id, double strict_tol) {
  if (strict_tol <= 0.0)
    throw config_error("verify_counterexample: strict_tol must be > 0");
  entry_or_throw(id);

  VerifyOutcome out;
  if (!is_connected(g)) {
    out.report.id = id;
    out.reason = "graph is disconnected (" + std::to_string(component_count(g)) +
                 " components)";
    return out;
  }
  out.report = evaluate_conjecture(id, g, 1e-12);
  if (out.report.clamped_at_argmax) {
    out.reason = "bound maximizer required clamping a negative radicand";
    return out;
  }
  if (!(out.report.margin > strict_tol)) {
    std::ostringstream why;
    why << "margin " << out.report.margin << " is not above strict tolerance "
        << strict_tol;
    out.reason = why.str();
    return out;
  }
  out.certified = true;
  out.record = CounterexampleRecord{g,
                                    id,
                                    out.report.mu,
                                    out.report.bound,
                                    out.report.margin,
                                    out.report.residual};
  return out;
}

std::string format_counterexample(const CounterexampleRecord& rec) {
  std::ostringstream out;
  out.precision(17);
  out << "conjecture: " << rec.conjecture_id << "\n"
      << "n: " << rec.graph.n << "\n"
      << "mu: " << rec.mu << "\n"
      << "bound: " << rec.bound << "\n"
      << "margin: " << rec.margin << "\n"
      << "graph6: " << to_graph6(rec.graph) << "\n"
      << "adjacency:\n"
      << to_adjacency_text(rec.graph) << "\n";
  return out.str();
}

CounterexampleRecord parse_counterexample(const std::string& text) {
  CounterexampleRecord rec;
  std::istringstream in(text);
  std::string line;
  std::string graph6;
  std::string adjacency;
  bool in_adjacency = false;
  bool have_id = false, have_mu = false, have_bound = false, have_margin = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (in_adjacency) {
      adjacency += line;
      adjacency += '\n';
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (line.empty()) continue;
      throw parse_error("counterexample block: line " + std::to_string(lineno) +
                        ": expected 'key: value'");
    }
    const std::string key = line.substr(0, colon);
    std::string value = line.substr(colon + 1);
    while (!value.empty() && value.front() == ' ') value.erase(value.begin());
    try {
      if (key == "conjecture") {
        rec.conjecture_id = std::stoi(value);
        have_id = true;
      } else if (key == "n") {
        // redundant with the adjacency block; validated below
      } else if (key == "mu") {
        rec.mu = std::stod(value);
        have_mu = true;
      } else if (key == "bound") {
        rec.bound = std::stod(value);
        have_bound = true;
      } else if (key == "margin") {
        rec.margin = std::stod(value);
        have_margin = true;
      } else if (key == "graph6") {
        graph6 = value;
      } else if (key == "adjacency") {
        in_adjacency = true;
      } else {
        throw parse_error("counterexample block: line " + std::to_string(lineno) +
                          ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw parse_error("counterexample block: line " + std::to_string(lineno) +
                        ": bad numeric value '" + value + "'");
    }
  }
  if (!have_id || !have_mu || !have_bound || !have_margin)
    throw parse_error("counterexample block: missing required keys");
  if (adjacency.empty() && graph6.empty())
    throw parse_error("counterexample block: no graph payload");
  rec.graph = adjacency.empty() ? from_graph6(graph6) : from_adjacency_text(adjacency);
  if (!graph6.empty() && !adjacency.empty() && to_graph6(rec.graph) != graph6)
    throw parse_error("counterexample block: graph6 and adjacency disagree");
  return rec;
}

}  // namespace lapspec
