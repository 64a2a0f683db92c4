#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracles {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) acc += a[static_cast<std::size_t>(i) * n + j] *
                         a[static_cast<std::size_t>(i) * n + j];
  return std::sqrt(acc);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(at(i, j)));
  if (scale == 0.0) scale = 1.0;

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_diagonal_norm(a, n) <= 1e-14 * scale * n) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::fabs(apq) <= 1e-18 * scale) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = at(i, i);
  std::sort(values.begin(), values.end());
  return values;
}

double laplacian_mu(const lapspec::Graph& g) {
  const int n = g.n;
  std::vector<double> lap(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && lapspec::has_edge(g, i, j)) {
        lap[static_cast<std::size_t>(i) * n + j] = -1.0;
        lap[static_cast<std::size_t>(i) * n + i] += 1.0;
      }
    }
  }
  return jacobi_eigenvalues(std::move(lap), n).back();
}

namespace {

struct Profile {
  std::vector<double> d, m;
};

Profile profile_of(const lapspec::Graph& g) {
  const int n = g.n;
  Profile p;
  p.d.assign(n, 0.0);
  p.m.assign(n, 0.0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v && lapspec::has_edge(g, v, u)) p.d[v] += 1.0;
  for (int v = 0; v < n; ++v) {
    double acc = 0.0;
    for (int u = 0; u < n; ++u)
      if (u != v && lapspec::has_edge(g, v, u)) acc += p.d[u];
    if (p.d[v] > 0.0) p.m[v] = acc / p.d[v];
  }
  return p;
}

// transcriptions of the published formulas; `cl` flags a clamped radicand
double croot(double x, bool& cl) {
  if (x < 0.0) {
    cl = true;
    return 0.0;
  }
  return std::sqrt(x);
}

double vertex_formula(int id, double d, double m, bool& cl) {
  using std::pow;
  switch (id) {
    case 2:
      return 2.0 * pow(m, 2) / d;
    case 3:
      return pow(m, 2) / d + m;
    case 15:
      return croot(4.0 * pow(m, 3) / d, cl);
    case 28:
      return croot(2.0 * pow(m, 4) / pow(d, 2) + 2.0 * d * m, cl);
    case 29:
      return croot(pow(m, 2) + 3.0 * pow(m, 3) / d, cl);
    case 31:
      return 4.0 * pow(m, 2) / (m + d);
    case 32:
      return croot(pow(m, 3) * (m + 3.0 * d), cl) / d;
    default:
      throw std::logic_error("oracle: not a vertex conjecture");
  }
}

double edge_formula(int id, double dv, double mv, double dj, double mj, bool& cl) {
  using std::pow;
  switch (id) {
    case 36:
      return 2.0 * (pow(mv, 2) + pow(mj, 2)) / (dv + dj);
    case 41:
      return 2.0 + (mv + mj) - (dv + dj) +
             croot(2.0 * (pow(dv, 2) + pow(dj, 2)) - 4.0 * (mv + mj) + 4.0, cl);
    case 43:
      return 2.0 + croot(3.0 * (pow(mv, 2) + pow(mj, 2)) - 2.0 * mv * mj -
                             4.0 * (dv + dj) + 4.0,
                         cl);
    case 49:
      return 2.0 + croot(2.0 * (pow(mv, 2) + pow(mj, 2)) + pow(dv - dj, 2) -
                             4.0 * (dv + dj) + 4.0,
                         cl);
    case 51:
      return 2.0 * (mv + mj) - 4.0 * mv * mj / (dv + dj);
    case 52:
      return 2.0 + croot(croot(8.0 * (pow(mv, 4) + pow(mj, 4)) -
                                   8.0 * (pow(dv, 2) + pow(dj, 2)) + 4.0,
                               cl) -
                             4.0 * (dv + dj) + 6.0,
                         cl);
    case 53:
      return 2.0 + croot(croot(8.0 * (pow(mv, 4) + pow(mj, 4)) -
                                   8.0 * (dv * mv + dj * mj) + 4.0,
                               cl) -
                             4.0 * (dv + dj) + 6.0,
                         cl);
    case 54:
      return 2.0 + croot(2.0 * (pow(mv, 2) + pow(mj, 2)) + (dv * mv + dj * mj) -
                             (pow(dv, 2) + pow(dj, 2)) - 4.0 * (dv + dj) + 4.0,
                         cl);
    case 55:
      return 2.0 + croot(3.0 * (pow(mv, 2) + pow(mj, 2)) -
                             (pow(dv, 2) + pow(dj, 2)) - 4.0 * (mv + mj) + 4.0,
                         cl);
    case 57:
      return 2.0 + croot(2.0 * (pow(mv, 2) + pow(mj, 2)) -
                             8.0 * (pow(dv, 2) + pow(dj, 2)) / (mv + mj) + 4.0,
                         cl);
    case 58:
      return 2.0 + croot(2.0 * (pow(mv, 2) + mv * mj + pow(mj, 2)) -
                             (dv * mv + dj * mj) - 4.0 * (dv + dj) + 4.0,
                         cl);
    case 59:
      return (2.0 * (pow(mv, 2) + mv * mj + pow(mj, 2)) -
              (pow(dv, 2) + pow(dj, 2))) /
             (mv + mj);
    case 60:
      return 2.0 + croot(2.0 * (pow(mv, 2) + mv * mj + pow(mj, 2)) -
                             (pow(dv, 2) + pow(dj, 2)) - 4.0 * (dv + dj) + 4.0,
                         cl);
    case 61:
      return 2.0 * (pow(mv, 2) + pow(mj, 2)) /
             (2.0 + croot(2.0 * (pow(dv - 1.0, 2) + pow(dj - 1.0, 2)), cl));
    case 62:
      return 2.0 + croot(pow(mv, 2) + 4.0 * mv * mj + pow(mj, 2) - 2.0 * dv * dj -
                             4.0 * (dv + dj) + 4.0,
                         cl);
    case 63:
      return dv + dj + mv + mj - 4.0 * dv * dj / (mv + mj);
    case 64:
      return mv * mj * (dv + dj) / (dv * dj);
    case 65:
      return (mv + mj) * (dv * mv + dj * mj) / (2.0 * mv * mj);
    case 66:
      return (pow(mv, 2) + 4.0 * mv * mj + pow(mj, 2) - (dv * mv + dj * mj)) /
             (dv + dj);
    case 67:
      return (mv + mj) * (dv * mv + dj * mj) / (2.0 * dv * dj);
    case 68:
      return 2.0 + croot(pow(mv - mj, 2) + 4.0 * dv * dj - 4.0 * (mv + mj) + 4.0, cl);
    default:
      throw std::logic_error("oracle: not an edge conjecture");
  }
}

bool is_vertex_id(int id) {
  return id == 2 || id == 3 || id == 15 || id == 28 || id == 29 || id == 31 ||
         id == 32;
}

}  // namespace

OracleBound bound(int id, const lapspec::Graph& g) {
  const Profile p = profile_of(g);
  OracleBound out{-1e300, false};
  if (is_vertex_id(id)) {
    for (int v = 0; v < g.n; ++v) {
      bool cl = false;
      const double val = vertex_formula(id, p.d[v], p.m[v], cl);
      out.clamped_anywhere |= cl;
      out.value = std::max(out.value, val);
    }
  } else {
    // ordered pairs: evaluates each printed formula in both orientations,
    // which doubles as a symmetry check of the transcription
    for (int v = 0; v < g.n; ++v) {
      for (int j = 0; j < g.n; ++j) {
        if (j == v || !lapspec::has_edge(g, v, j)) continue;
        bool cl = false;
        const double val = edge_formula(id, p.d[v], p.m[v], p.d[j], p.m[j], cl);
        out.clamped_anywhere |= cl;
        out.value = std::max(out.value, val);
      }
    }
  }
  return out;
}

void for_each_graph(int n, const std::function<void(const lapspec::Graph&)>& fn) {
  const int slots = lapspec::edge_slot_count(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots); ++bits) {
    lapspec::Graph g = lapspec::empty_graph(n);
    for (int k = 0; k < slots; ++k) g.edge_bits[k] = (bits >> k) & 1;
    fn(g);
  }
}

lapspec::Graph random_connected_graph(int n, double p, lapspec::Rng& rng) {
  for (;;) {
    lapspec::Graph g = lapspec::empty_graph(n);
    for (auto& b : g.edge_bits) b = rng.bernoulli(p) ? 1 : 0;
    if (lapspec::is_connected(g)) return g;
  }
}

}  // namespace oracles
