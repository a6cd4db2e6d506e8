#include "spectral/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace spectral {
namespace {

double off_diagonal_norm(const Eigen::MatrixXd& m) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i != j) acc += m(i, j) * m(i, j);
    }
  }
  return std::sqrt(acc);
}

// Largest-magnitude entry positive; the scan keeps the first maximizer, which
// resolves ties toward the smallest vertex index.
void normalize_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index arg = 0;
    double best = std::abs(vectors(0, j));
    for (Eigen::Index i = 1; i < vectors.rows(); ++i) {
      if (std::abs(vectors(i, j)) > best) {
        best = std::abs(vectors(i, j));
        arg = i;
      }
    }
    if (vectors(arg, j) < 0.0) vectors.col(j) = -vectors.col(j);
  }
}

void sort_descending(Eigen::VectorXd& values, Eigen::MatrixXd& vectors) {
  const Eigen::Index n = values.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return values[a] > values[b]; });
  Eigen::VectorXd sorted_values(n);
  Eigen::MatrixXd sorted_vectors(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    sorted_values[k] = values[order[static_cast<std::size_t>(k)]];
    sorted_vectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
  }
  values = std::move(sorted_values);
  vectors = std::move(sorted_vectors);
}

EigenDecomposition decompose(const Graph& g, const Eigen::MatrixXd& matrix, OperatorKind source,
                             const SpectraOptions& options) {
  if (g.vertex_count() < 1) throw InvalidParameter("decomposition needs at least one vertex");
  auto solution = eigh_symmetric(matrix, options);
  // Gerschgorin sanity: both D-A and D+A have spectrum inside [0, 2*max degree].
  const double ceiling = 2.0 * g.max_degree() + 1e-9;
  for (Eigen::Index k = 0; k < solution.eigenvalues.size(); ++k) {
    const double value = solution.eigenvalues[k];
    if (value < -1e-9 || value > ceiling) {
      throw ConvergenceFailure("eigenvalue " + std::to_string(value) +
                               " escapes the Gerschgorin interval [0, " + std::to_string(ceiling) + "]");
    }
  }
  return {std::move(solution.eigenvalues), std::move(solution.eigenvectors), source};
}

}  // namespace

SymmetricEigenSolution eigh_symmetric(const Eigen::MatrixXd& matrix, const SpectraOptions& options) {
  if (matrix.rows() != matrix.cols()) throw InvalidParameter("matrix must be square");
  const Eigen::Index n = matrix.rows();
  if (n == 0) throw InvalidParameter("matrix must be nonempty");
  const double frobenius = matrix.norm();
  const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  if (asym > options.symmetry_rel_tol * std::max(1.0, frobenius)) {
    throw InvalidParameter("matrix is not symmetric (max |a_ij - a_ji| = " + std::to_string(asym) + ")");
  }

  Eigen::MatrixXd a = (matrix + matrix.transpose()) / 2.0;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double target = options.off_diag_rel_tol * frobenius;

  int sweep = 0;
  double off = off_diagonal_norm(a);
  while (off > target) {
    if (sweep++ >= options.max_sweeps) {
      throw ConvergenceFailure("jacobi sweeps exhausted, off-diagonal residual " + std::to_string(off));
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        Eigen::JacobiRotation<double> rotation;
        rotation.makeJacobi(a(p, p), a(p, q), a(q, q));
        a.applyOnTheLeft(p, q, rotation.transpose());
        a.applyOnTheRight(p, q, rotation);
        v.applyOnTheRight(p, q, rotation);
      }
    }
    off = off_diagonal_norm(a);
  }

  Eigen::VectorXd values = a.diagonal();
  sort_descending(values, v);
  normalize_signs(v);
  return {std::move(values), std::move(v)};
}

EigenDecomposition decompose_laplacian(const Graph& g, const SpectraOptions& options) {
  return decompose(g, laplacian_matrix(g), OperatorKind::laplacian, options);
}

EigenDecomposition decompose_signless(const Graph& g, const SpectraOptions& options) {
  return decompose(g, signless_matrix(g), OperatorKind::signless, options);
}

double dirichlet_energy(const Graph& g, const VertexFunction& f) {
  if (f.size() != g.vertex_count()) throw InvalidParameter("vertex function length does not match graph");
  double acc = 0.0;
  for (const auto& [u, v] : g.edges()) {
    const double d = f[u] - f[v];
    acc += d * d;
  }
  return acc;
}

double signless_energy(const Graph& g, const VertexFunction& f) {
  if (f.size() != g.vertex_count()) throw InvalidParameter("vertex function length does not match graph");
  double acc = 0.0;
  for (const auto& [u, v] : g.edges()) {
    const double s = f[u] + f[v];
    acc += s * s;
  }
  return acc;
}

bool effectively_zero(const VertexFunction& f) {
  return f.norm() <= 1e-12 * std::sqrt(static_cast<double>(f.size()));
}

double rayleigh_quotient(const Graph& g, const VertexFunction& f, OperatorKind op) {
  if (f.size() != g.vertex_count()) throw InvalidParameter("vertex function length does not match graph");
  if (effectively_zero(f)) throw DegenerateInput("rayleigh quotient of a numerically zero vector");
  const double energy = op == OperatorKind::laplacian ? dirichlet_energy(g, f) : signless_energy(g, f);
  return energy / f.squaredNorm();
}

}  // namespace spectral
