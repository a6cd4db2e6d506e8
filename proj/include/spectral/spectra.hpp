#pragma once

#include <Eigen/Dense>

#include "spectral/graph.hpp"

namespace spectral {

enum class OperatorKind { laplacian, signless };

// Solver tolerances.  Defaults match the residual guarantees promised by
// EigenDecomposition; override per call when experimenting.
struct SpectraOptions {
  double symmetry_rel_tol = 1e-12;  // max |a_ij - a_ji| relative to ||A||_F
  double off_diag_rel_tol = 1e-12;  // sweep until off(A) <= tol * ||A||_F
  int max_sweeps = 100;
};

struct SymmetricEigenSolution {
  Eigen::VectorXd eigenvalues;   // sorted descending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, aligned with eigenvalues
};

// Full spectrum of a graph operator, eigenvalues descending.  Guarantees
// (for an n x n operator M with top eigenvalue lambda_1):
//   ||M phi_k - lambda_k phi_k|| <= 1e-9 * max(1, lambda_1)
//   |<phi_i, phi_j> - delta_ij|  <= 1e-10
// Each eigenvector is normalized so its largest-magnitude entry is positive
// (first such entry on ties).
struct EigenDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  OperatorKind source = OperatorKind::laplacian;

  Eigen::Index size() const { return eigenvalues.size(); }
  Eigen::VectorXd eigenvector(Eigen::Index k) const { return eigenvectors.col(k); }
};

// Cyclic Jacobi diagonalization of a dense symmetric matrix.  Throws
// InvalidParameter for an asymmetric input and ConvergenceFailure (with the
// residual in the message) if the sweep cap is hit.
SymmetricEigenSolution eigh_symmetric(const Eigen::MatrixXd& matrix,
                                      const SpectraOptions& options = {});

EigenDecomposition decompose_laplacian(const Graph& g, const SpectraOptions& options = {});
EigenDecomposition decompose_signless(const Graph& g, const SpectraOptions& options = {});

// <f, (D-A) f> as the explicit edge sum of squared differences.
double dirichlet_energy(const Graph& g, const VertexFunction& f);

// <f, (D+A) f> as the explicit edge sum of squared sums.
double signless_energy(const Graph& g, const VertexFunction& f);

// energy(f) / ||f||^2; throws DegenerateInput when ||f|| <= 1e-12 * sqrt(n).
double rayleigh_quotient(const Graph& g, const VertexFunction& f, OperatorKind op);

// Shared near-zero test for vertex functions (relative to unit entry scale).
bool effectively_zero(const VertexFunction& f);

}  // namespace spectral
