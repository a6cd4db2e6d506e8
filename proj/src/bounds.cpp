#include "spectral/bounds.hpp"

#include <cmath>

#include "spectral/products.hpp"

namespace spectral {
namespace {

std::string describe(const Graph& g) {
  return "graph(n=" + std::to_string(g.vertex_count()) + ", edges=" + std::to_string(g.edge_count()) + ")";
}

double inequality_tolerance(double rhs, const BoundOptions& options) {
  return options.check_rel_tol * std::max(1.0, std::abs(rhs));
}

void finish_inequality(BoundReport& report, const BoundOptions& options) {
  report.equality = false;
  report.slack = report.rhs - report.lhs;
  report.tolerance = inequality_tolerance(report.rhs, options);
  report.satisfied = report.lhs <= report.rhs + report.tolerance;
}

void finish_equality(BoundReport& report, double scale, const BoundOptions& options) {
  report.equality = true;
  report.slack = report.rhs - report.lhs;
  report.tolerance = options.equality_rel_tol * scale;
  report.satisfied = std::abs(report.lhs - report.rhs) <= report.tolerance;
}

// Shared preamble of the regular-graph eigenvector checks: the common degree
// and the signless eigenvalue, with the residual gate.
struct SignlessEigenpair {
  int degree;
  double epsilon;
  double residual;
};

SignlessEigenpair require_signless_eigenpair(const Graph& g, const VertexFunction& phi,
                                             const BoundOptions& options) {
  const auto degree = regular_degree(g);
  if (!degree) throw InvalidParameter("regularity required: graph is not regular");
  const double eps = rayleigh_quotient(g, phi, OperatorKind::signless);
  const double residual = (apply_signless(g, phi) - eps * phi).norm();
  if (residual > options.eigen_residual_rel_tol * phi.norm()) {
    throw InvalidParameter("not an eigenvector of D+A (residual " + std::to_string(residual) + ")");
  }
  return {*degree, eps, residual};
}

}  // namespace

std::string_view bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::thm1_proof_form: return "thm1-proof-form";
    case BoundKind::thm1_normalized: return "thm1-normalized";
    case BoundKind::thm2: return "thm2";
    case BoundKind::corollary: return "corollary";
    case BoundKind::one_step: return "one-step";
    case BoundKind::rayleigh_ritz_cut: return "rayleigh-ritz-cut";
  }
  return "unknown";
}

Theorem1Report theorem1_check(const Graph& g, const VertexFunction& phi,
                              const VertexFunction& psi, const BoundOptions& options) {
  const double eps_phi = rayleigh_quotient(g, phi, OperatorKind::signless);
  const double eps_psi = rayleigh_quotient(g, psi, OperatorKind::signless);
  const double eps = std::max(eps_phi, eps_psi);

  const VertexFunction product = hadamard(phi, psi);
  const double phi_inf = phi.cwiseAbs().maxCoeff();
  const double psi_inf = psi.cwiseAbs().maxCoeff();

  Theorem1Report result;
  BoundReport& proof = result.proof_form;
  proof.theorem = BoundKind::thm1_proof_form;
  proof.inputs = describe(g);
  proof.epsilons = {eps_phi, eps_psi};
  proof.lhs = dirichlet_energy(g, product);
  proof.rhs = 2.0 * eps * (phi_inf * phi_inf * psi.squaredNorm() + phi.squaredNorm() * psi_inf * psi_inf);
  finish_inequality(proof, options);
  proof.diagnostics = {{"epsilon_used", eps},
                       {"phi_l2", phi.norm()},
                       {"psi_l2", psi.norm()},
                       {"phi_linf", phi_inf},
                       {"psi_linf", psi_inf},
                       {"product_l2", product.norm()}};

  if (!effectively_zero(product)) {
    BoundReport normalized = proof;
    normalized.theorem = BoundKind::thm1_normalized;
    const double denom = product.squaredNorm();
    normalized.lhs = proof.lhs / denom;
    normalized.rhs = proof.rhs / denom;
    finish_inequality(normalized, options);
    result.normalized = std::move(normalized);
  }
  return result;
}

BoundReport theorem2_check(const Graph& g, const VertexFunction& phi, int k,
                           const BoundOptions& options) {
  if (k < 0) throw InvalidParameter("theorem2 needs k >= 0");
  const auto [degree, eps, residual] = require_signless_eigenpair(g, phi, options);
  if (!(eps < degree)) {
    throw InvalidParameter("bound inapplicable: eps = " + std::to_string(eps) +
                           " is not below the degree " + std::to_string(degree));
  }

  // Lowest-index maximizer of |phi|.
  int argmax = 0;
  double best = std::abs(phi[0]);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (std::abs(phi[v]) > best) {
      best = std::abs(phi[v]);
      argmax = v;
    }
  }

  const VertexFunction walk = walk_distribution(g, argmax, 2 * k);
  const double amplification = std::pow(degree / (degree - eps), 2 * k);

  BoundReport report;
  report.theorem = BoundKind::thm2;
  report.inputs = describe(g);
  report.epsilons = {eps};
  report.lhs = best;
  report.rhs = amplification * walk.norm() * phi.norm();
  finish_inequality(report, options);

  double walk_norm_max = 0.0;
  for (int start = 0; start < g.vertex_count(); ++start) {
    walk_norm_max = std::max(walk_norm_max, walk_distribution(g, start, 2 * k).norm());
  }
  report.diagnostics = {{"k", static_cast<double>(k)},
                        {"argmax_vertex", static_cast<double>(argmax)},
                        {"degree", static_cast<double>(degree)},
                        {"eigen_residual", residual},
                        {"walk_norm", walk.norm()},
                        {"walk_norm_max_over_starts", walk_norm_max},
                        {"amplification", amplification},
                        {"phi_l2", phi.norm()}};
  return report;
}

BoundReport corollary_check(const Graph& g, const VertexFunction& phi, const BoundOptions& options) {
  const auto [degree, eps, residual] = require_signless_eigenpair(g, phi, options);
  const double ratio = eps / degree;
  const VertexFunction one = apply_walk(g, phi);
  const VertexFunction two = apply_walk(g, one);
  const double norm = phi.norm();

  BoundReport report;
  report.theorem = BoundKind::corollary;
  report.inputs = describe(g);
  report.epsilons = {eps};
  report.lhs = (phi - two).norm();
  report.rhs = ratio * (2.0 - ratio) * norm;
  finish_equality(report, norm, options);

  const double one_lhs = (phi - one).norm();
  const double one_rhs = (2.0 - ratio) * norm;
  const double fixed_point_residual = (two - (1.0 - ratio) * (1.0 - ratio) * phi).norm();
  report.satisfied = report.satisfied && std::abs(one_lhs - one_rhs) <= report.tolerance &&
                     fixed_point_residual <= report.tolerance;
  report.diagnostics = {{"degree", static_cast<double>(degree)},
                        {"eigen_residual", residual},
                        {"one_step_lhs", one_lhs},
                        {"one_step_rhs", one_rhs},
                        {"one_step_error", std::abs(one_lhs - one_rhs)},
                        {"two_step_error", std::abs(report.lhs - report.rhs)},
                        {"fixed_point_residual", fixed_point_residual},
                        {"phi_l2", norm}};
  return report;
}

BoundReport one_step_check(const Graph& g, const VertexFunction& phi, const BoundOptions& options) {
  const auto [degree, eps, residual] = require_signless_eigenpair(g, phi, options);
  const double norm = phi.norm();

  BoundReport report;
  report.theorem = BoundKind::one_step;
  report.inputs = describe(g);
  report.epsilons = {eps};
  report.lhs = (phi - apply_walk(g, phi)).norm();
  report.rhs = (2.0 - eps / degree) * norm;
  finish_equality(report, norm, options);
  report.diagnostics = {{"degree", static_cast<double>(degree)}, {"eigen_residual", residual}};
  return report;
}

BoundReport rayleigh_ritz_cut(const Graph& g, const std::vector<int>& colors,
                              const BoundOptions& options) {
  const int n = g.vertex_count();
  if (static_cast<int>(colors.size()) != n) throw InvalidParameter("invalid partition: wrong length");
  int side_a = 0;
  for (int c : colors) {
    if (c != 0 && c != 1) throw InvalidParameter("invalid partition: colors must be 0 or 1");
    side_a += c == 0 ? 1 : 0;
  }
  if (side_a == 0 || side_a == n) throw InvalidParameter("invalid partition: a side is empty");

  int within = 0;
  for (const auto& [u, v] : g.edges()) {
    if (colors[static_cast<std::size_t>(u)] == colors[static_cast<std::size_t>(v)]) ++within;
  }

  const VertexFunction chi = cut_vector(colors);
  const auto signless = decompose_signless(g);

  BoundReport report;
  report.theorem = BoundKind::rayleigh_ritz_cut;
  report.inputs = describe(g);
  report.lhs = signless.eigenvalues[signless.size() - 1];
  report.rhs = rayleigh_quotient(g, chi, OperatorKind::signless);
  report.epsilons = {report.rhs};
  finish_inequality(report, options);
  report.diagnostics = {{"within_part_edges", static_cast<double>(within)},
                        {"side_a", static_cast<double>(side_a)},
                        {"side_b", static_cast<double>(n - side_a)},
                        {"cut_quotient_by_count", 4.0 * within / n}};
  return report;
}

VertexFunction walk_distribution(const Graph& g, int start, int steps) {
  if (start < 0 || start >= g.vertex_count()) throw InvalidParameter("walk start out of range");
  if (steps < 0) throw InvalidParameter("walk steps must be nonnegative");
  VertexFunction dist = VertexFunction::Zero(g.vertex_count());
  dist[start] = 1.0;
  for (int s = 0; s < steps; ++s) dist = apply_walk(g, dist);
  return dist;
}

}  // namespace spectral
