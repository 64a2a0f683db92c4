#include "lapspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "lapspec/errors.hpp"

namespace lapspec {

namespace {

constexpr int kMaxQlIterations = 50;

double sign_like(double magnitude, double sign_source) {
  return sign_source >= 0.0 ? std::fabs(magnitude) : -std::fabs(magnitude);
}

// Householder reduction of the symmetric matrix a (row-major, overwritten
// with the accumulated orthogonal transform) to tridiagonal form: d gets the
// diagonal, e the subdiagonal in e[1..n-1].
void householder_tridiagonalize(std::vector<double>& a, int n,
                                std::vector<double>& d, std::vector<double>& e) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          at(j, i) = at(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j] - hh * f;
          e[j] = g;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    const int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
        for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
      }
    }
    d[i] = at(i, i);
    at(i, i) = 1.0;
    for (int j = 0; j <= l; ++j) at(j, i) = at(i, j) = 0.0;
  }
}

// QL iteration with implicit shifts on the tridiagonal (d, e); rotations are
// accumulated into the columns of z. On return d holds eigenvalues.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e,
                       std::vector<double>& z, int n) {
  auto zt = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
      }
      if (m != l) {
        if (iter++ == kMaxQlIterations) {
          const double best = *std::max_element(d.begin(), d.end());
          throw numeric_error(
              "symmetric_eigen: eigenvalue " + std::to_string(l) +
                  " failed to converge in " + std::to_string(kMaxQlIterations) +
                  " QL iterations",
              best);
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + sign_like(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = zt(k, i + 1);
            zt(k, i + 1) = s * zt(k, i) + c * f;
            zt(k, i) = c * zt(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

void multiply(const std::vector<double>& a, const std::vector<double>& x,
              std::vector<double>& out, int n) {
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    const double* row = &a[static_cast<std::size_t>(i) * n];
    for (int j = 0; j < n; ++j) acc += row[j] * x[j];
    out[i] = acc;
  }
}

double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

// Solve (a - shift*I) x = b by LU with partial pivoting; a is n*n row-major.
// Near-singular systems are fine: inverse iteration only needs the direction.
std::vector<double> solve_shifted(std::vector<double> a, double shift,
                                  std::vector<double> b, int n) {
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) at(i, i) -= shift;

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(at(r, col)) > std::fabs(at(pivot, col))) pivot = r;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(at(col, j), at(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    double diag = at(col, col);
    if (diag == 0.0) diag = std::numeric_limits<double>::min();
    for (int r = col + 1; r < n; ++r) {
      const double factor = at(r, col) / diag;
      if (factor == 0.0) continue;
      for (int j = col; j < n; ++j) at(r, j) -= factor * at(col, j);
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double acc = b[i];
    for (int j = i + 1; j < n; ++j) acc -= at(i, j) * x[j];
    double diag = at(i, i);
    if (diag == 0.0) diag = std::numeric_limits<double>::min();
    x[i] = acc / diag;
  }
  return x;
}

}  // namespace

EigenDecomposition symmetric_eigen(std::vector<double> a, int n, bool want_vectors) {
  if (n < 1) throw shape_error("symmetric_eigen: n must be >= 1");
  if (static_cast<int>(a.size()) != n * n)
    throw shape_error("symmetric_eigen: matrix storage must be n*n");

  EigenDecomposition dec;
  dec.n = n;
  if (n == 1) {
    dec.values = {a[0]};
    if (want_vectors) dec.vectors = {1.0};
    return dec;
  }

  std::vector<double> d(n, 0.0), e(n, 0.0);
  householder_tridiagonalize(a, n, d, e);
  ql_implicit_shift(d, e, a, n);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });

  dec.values.resize(n);
  for (int i = 0; i < n; ++i) dec.values[i] = d[order[i]];
  if (want_vectors) {
    dec.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        dec.vectors[static_cast<std::size_t>(i) * n + j] =
            a[static_cast<std::size_t>(i) * n + order[j]];
  }
  return dec;
}

SpectralResult laplacian_spectral_radius(const Graph& g, double tol) {
  if (tol <= 0.0) throw config_error("laplacian_spectral_radius: tol must be > 0");
  if (g.n == 1) return {0.0, 0.0};

  const int n = g.n;
  const std::vector<double> lap = laplacian_matrix(g);
  EigenDecomposition dec = symmetric_eigen(lap, n, true);

  double mu = dec.values[n - 1];
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = dec.vectors[static_cast<std::size_t>(i) * n + (n - 1)];

  std::vector<double> lv(n);
  auto residual_of = [&](double lambda) {
    multiply(lap, v, lv, n);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = lv[i] - lambda * v[i];
      acc += r * r;
    }
    return std::sqrt(acc);
  };

  double res = residual_of(mu);
  for (int round = 0; round < 3 && res > tol; ++round) {
    // inverse-iteration polish at the current shift, then Rayleigh update
    std::vector<double> y = solve_shifted(lap, mu, v, n);
    const double len = norm2(y);
    if (!(len > 0.0) || !std::isfinite(len)) break;
    for (int i = 0; i < n; ++i) v[i] = y[i] / len;
    multiply(lap, v, lv, n);
    mu = std::inner_product(v.begin(), v.end(), lv.begin(), 0.0);
    res = residual_of(mu);
  }
  if (!(res <= tol) || !std::isfinite(mu))
    throw numeric_error("laplacian_spectral_radius: residual " +
                            std::to_string(res) + " above tolerance",
                        mu);
  return {mu, res};
}

}  // namespace lapspec
