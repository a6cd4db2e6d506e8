#pragma once

#include <Eigen/Dense>

#include "spectral/graph.hpp"
#include "spectral/spectra.hpp"

namespace spectral {

// Entrywise (Hadamard) product of two vertex functions.
VertexFunction hadamard(const VertexFunction& f, const VertexFunction& g);

// All-pairs matrix of Laplacian Rayleigh quotients of eigenvector products.
// Entry (i, j) follows the decomposition's descending eigenvalue order, so
// the (0, 0) corner is the most oscillatory pair.  Pairs whose product is
// numerically zero are masked, not errors.
struct ProductHeatmap {
  Eigen::MatrixXd values;
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> undefined;

  Eigen::Index size() const { return values.rows(); }
};

ProductHeatmap product_heatmap(const Graph& g, const EigenDecomposition& dec);

// Per-vertex sign in {-1, 0, +1}; sign 0 iff |value| <= tolerance * max|value|.
struct SignPattern {
  Eigen::VectorXi signs;
  double tolerance;
};

SignPattern sign_pattern(const VertexFunction& f, double tolerance = 1e-9);

// Fraction of edges whose endpoints carry equal nonzero signs.  Edges touching
// a 0-sign vertex are excluded from both numerator and denominator; throws
// DegenerateInput if that excludes every edge.
struct EdgeSignAgreement {
  double fraction;
  int agreeing;
  int counted;   // edges with both endpoint signs nonzero
  int excluded;  // edges touching a zero-sign vertex
};

EdgeSignAgreement edge_sign_agreement(const Graph& g, const SignPattern& pattern);

}  // namespace spectral
