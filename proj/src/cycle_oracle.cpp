#include "spectral/cycle_oracle.hpp"

#include <cmath>
#include <numbers>

namespace spectral {
namespace {

// Angle 2 pi (k v mod n) / n; the modulus runs over exact integers.
double reduced_angle(int n, long long k, long long v) {
  const long long r = (k * v) % n;
  return 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n);
}

}  // namespace

CycleEigenpair cycle_eigenpair(int n, int k) {
  if (n < 3) throw InvalidParameter("cycle oracle needs n >= 3");
  if (k < 0 || 2 * k > n) throw InvalidParameter("frequency k must satisfy 0 <= k <= n/2");
  CycleEigenpair pair;
  pair.n = n;
  pair.k = k;
  pair.eigenvalue = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
  pair.sine.resize(n);
  pair.cosine.resize(n);
  for (int v = 0; v < n; ++v) {
    const double angle = reduced_angle(n, k, v);
    pair.sine[v] = std::sin(angle);
    pair.cosine[v] = std::cos(angle);
  }
  return pair;
}

TopPairProduct top_pair_product_identity(int n) {
  if (n < 5 || n % 2 == 0) throw InvalidParameter("top pair identity needs odd n >= 5");
  const auto top = cycle_eigenpair(n, (n - 1) / 2);
  const auto base = cycle_eigenpair(n, 1);
  TopPairProduct out;
  out.product = top.sine.cwiseProduct(top.cosine);
  out.reference = -base.sine / 2.0;
  out.max_deviation = (out.product - out.reference).cwiseAbs().maxCoeff();
  return out;
}

SharpnessRecord sharpness_experiment(int n) {
  if (n < 5 || n % 2 == 0) throw InvalidParameter("sharpness experiment needs odd n >= 5");
  const auto top = cycle_eigenpair(n, (n - 1) / 2);
  const VertexFunction& x = top.sine;
  const VertexFunction& y = top.cosine;
  const VertexFunction product = x.cwiseProduct(y);

  SharpnessRecord record;
  record.n = n;
  record.epsilon = 2.0 - 2.0 * std::cos(std::numbers::pi / n);
  record.actual = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / n);
  const double x_inf = x.cwiseAbs().maxCoeff();
  const double y_inf = y.cwiseAbs().maxCoeff();
  record.bound = 2.0 * record.epsilon *
                 (x_inf * x_inf * y.squaredNorm() + x.squaredNorm() * y_inf * y_inf) /
                 product.squaredNorm();
  record.ratio = record.actual / record.bound;
  return record;
}

}  // namespace spectral
