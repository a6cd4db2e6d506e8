#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectral/graph.hpp"
#include "spectral/spectra.hpp"

namespace spectral {

enum class BoundKind {
  thm1_proof_form,   // <phi psi, L(phi psi)> <= 2 eps (|phi|inf^2 |psi|2^2 + |phi|2^2 |psi|inf^2)
  thm1_normalized,   // same, both sides divided by |phi psi|2^2
  thm2,              // |phi|inf <= (d/(d-eps))^{2k} |(AD^-1)^{2k} delta_m|2 |phi|2
  corollary,         // |phi - (AD^-1)^2 phi|2 = (eps/d)(2 - eps/d) |phi|2
  one_step,          // |phi - (AD^-1) phi|2 = (2 - eps/d) |phi|2
  rayleigh_ritz_cut  // min signless eigenvalue <= cut-vector quotient
};

std::string_view bound_kind_name(BoundKind kind);

// Outcome of one machine-checkable inequality or identity.
struct BoundReport {
  BoundKind theorem;
  std::string inputs;
  bool equality = false;          // verdict compares |lhs - rhs| instead of lhs <= rhs
  std::vector<double> epsilons;   // signless energies per unit squared l2 norm
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;             // rhs - lhs
  double tolerance = 0.0;         // absolute tolerance backing the verdict
  bool satisfied = false;
  std::vector<std::pair<std::string, double>> diagnostics;
};

struct BoundOptions {
  double check_rel_tol = 1e-9;           // inequality slack, relative to max(1, |rhs|)
  double equality_rel_tol = 1e-8;        // identity checks, relative to |phi|2
  double eigen_residual_rel_tol = 1e-8;  // accepting phi as a signless eigenvector
};

// Product-smoothness bound for arbitrary phi, psi (eigenvectors not required,
// phi = psi allowed).  eps is the larger of the two signless Rayleigh
// quotients.  The proof form is the authoritative verdict; the normalized
// form divides both sides by |phi psi|^2 and is absent when the product is
// numerically zero.
struct Theorem1Report {
  BoundReport proof_form;
  std::optional<BoundReport> normalized;
};

Theorem1Report theorem1_check(const Graph& g, const VertexFunction& phi,
                              const VertexFunction& psi, const BoundOptions& options = {});

// Sup-norm bound for a signless eigenvector on a d-regular graph via the
// 2k-step walk distribution from the maximizing vertex (lowest index on
// ties).  Requires eps < d.
BoundReport theorem2_check(const Graph& g, const VertexFunction& phi, int k,
                           const BoundOptions& options = {});

// Two-step walk identity for a signless eigenpair on a regular graph; the
// one-step identity and the fixed-point residual
// |(AD^-1)^2 phi - (1 - eps/d)^2 phi| ride along in the diagnostics and the
// verdict requires all of them.
BoundReport corollary_check(const Graph& g, const VertexFunction& phi,
                            const BoundOptions& options = {});

BoundReport one_step_check(const Graph& g, const VertexFunction& phi,
                           const BoundOptions& options = {});

// Rayleigh-Ritz certificate: the smallest signless eigenvalue is at most the
// cut vector's quotient 4 * (within-part edges) / n.  `colors` assigns each
// vertex to side 0 or 1; both sides must be nonempty.
BoundReport rayleigh_ritz_cut(const Graph& g, const std::vector<int>& colors,
                              const BoundOptions& options = {});

// (A D^-1)^steps applied to the point mass at `start`.
VertexFunction walk_distribution(const Graph& g, int start, int steps);

}  // namespace spectral
