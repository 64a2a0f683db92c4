#pragma once

#include <vector>

#include "lapspec/graph.hpp"

namespace lapspec {

struct SpectralResult {
  double mu = 0.0;        // largest Laplacian eigenvalue
  double residual = 0.0;  // ||L v - mu v||_2 for the unit eigenvector v
};

// Full eigendecomposition of a dense symmetric matrix: Householder
// tridiagonalization followed by QL iteration with implicit shifts.
// values ascending; vectors (when requested) row-major with column i the
// unit eigenvector of values[i]. Throws numeric_error if any eigenvalue
// fails to converge within the per-eigenvalue iteration budget.
struct EigenDecomposition {
  int n = 0;
  std::vector<double> values;
  std::vector<double> vectors;  // empty unless requested
};
EigenDecomposition symmetric_eigen(std::vector<double> a, int n,
                                   bool want_vectors = false);

// Largest Laplacian eigenvalue of g with |mu - lambda_max| <= tol.
// Deterministic for fixed input. If the achieved residual exceeds tol the
// eigenpair is polished by inverse iteration; persistent failure raises
// numeric_error carrying the best estimate.
SpectralResult laplacian_spectral_radius(const Graph& g, double tol = 1e-10);

}  // namespace lapspec
