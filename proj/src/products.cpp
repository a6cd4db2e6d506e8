#include "spectral/products.hpp"

#include <cmath>

namespace spectral {

VertexFunction hadamard(const VertexFunction& f, const VertexFunction& g) {
  if (f.size() != g.size()) throw InvalidParameter("hadamard product needs equal lengths");
  return f.cwiseProduct(g);
}

ProductHeatmap product_heatmap(const Graph& g, const EigenDecomposition& dec) {
  const Eigen::Index n = dec.size();
  if (n != g.vertex_count()) throw InvalidParameter("decomposition does not belong to this graph");
  ProductHeatmap heatmap;
  heatmap.values = Eigen::MatrixXd::Zero(n, n);
  heatmap.undefined = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const VertexFunction product = dec.eigenvectors.col(i).cwiseProduct(dec.eigenvectors.col(j));
      if (effectively_zero(product)) {
        heatmap.undefined(i, j) = heatmap.undefined(j, i) = true;
      } else {
        const double quotient = rayleigh_quotient(g, product, OperatorKind::laplacian);
        heatmap.values(i, j) = heatmap.values(j, i) = quotient;
      }
    }
  }
  return heatmap;
}

SignPattern sign_pattern(const VertexFunction& f, double tolerance) {
  if (tolerance < 0.0) throw InvalidParameter("sign tolerance must be nonnegative");
  const double band = tolerance * (f.size() > 0 ? f.cwiseAbs().maxCoeff() : 0.0);
  Eigen::VectorXi signs(f.size());
  for (Eigen::Index v = 0; v < f.size(); ++v) {
    signs[v] = std::abs(f[v]) <= band ? 0 : (f[v] > 0.0 ? 1 : -1);
  }
  return {std::move(signs), tolerance};
}

EdgeSignAgreement edge_sign_agreement(const Graph& g, const SignPattern& pattern) {
  if (pattern.signs.size() != g.vertex_count()) {
    throw InvalidParameter("sign pattern length does not match graph");
  }
  int agreeing = 0;
  int counted = 0;
  int excluded = 0;
  for (const auto& [u, v] : g.edges()) {
    const int su = pattern.signs[u];
    const int sv = pattern.signs[v];
    if (su == 0 || sv == 0) {
      ++excluded;
    } else {
      ++counted;
      if (su == sv) ++agreeing;
    }
  }
  if (counted == 0) throw DegenerateInput("sign agreement undefined: every edge touches a zero sign");
  return {static_cast<double>(agreeing) / counted, agreeing, counted, excluded};
}

}  // namespace spectral
