#pragma once

#include "spectral/graph.hpp"

namespace spectral {

// Closed-form eigenpair of the cycle C_n at frequency k:
//   eigenvalue 2 - 2 cos(2 pi k / n)
//   sine vector   x_k(v) = sin(2 pi k v / n)
//   cosine vector y_k(v) = cos(2 pi k v / n)
// x_0 is identically zero, as is x_{n/2} for even n.
struct CycleEigenpair {
  int n;
  int k;
  double eigenvalue;
  VertexFunction sine;
  VertexFunction cosine;
};

// Requires n >= 3 and 0 <= k <= n/2.  Trigonometric arguments are reduced
// modulo 2 pi before evaluation so large k*v products lose no precision.
CycleEigenpair cycle_eigenpair(int n, int k);

// For odd n, the entrywise product of the two top-frequency eigenvectors
// collapses to a single low-frequency eigenvector:
//   x_{(n-1)/2}(v) * y_{(n-1)/2}(v) = -sin(2 pi v / n) / 2 = -x_1(v) / 2.
// Returns the product, that reference vector, and their max deviation.
struct TopPairProduct {
  VertexFunction product;
  VertexFunction reference;
  double max_deviation;
};

TopPairProduct top_pair_product_identity(int n);

// How tight the product-smoothness bound is on C_n (odd n): the product's
// actual Laplacian Rayleigh quotient 2 - 2 cos(2 pi / n) against the
// normalized bound 2 eps (||x||_inf^2 ||y||^2 + ||x||^2 ||y||_inf^2) / ||xy||^2
// with eps = 2 - 2 cos(pi / n).  The ratio tends to 1/4 from below.
struct SharpnessRecord {
  int n;
  double epsilon;
  double actual;  // Rayleigh quotient of the product
  double bound;   // normalized right-hand side
  double ratio;   // actual / bound
};

SharpnessRecord sharpness_experiment(int n);

}  // namespace spectral
