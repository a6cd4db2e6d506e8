#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "spectral/cycle_oracle.hpp"
#include "spectral/graph.hpp"
#include "spectral/spectra.hpp"

using namespace spectral;

namespace {

// analytic laplacian spectrum of C_n with multiplicities, sorted descending
std::vector<double> cycle_spectrum(int n) {
  std::vector<double> values;
  for (int k = 0; 2 * k <= n; ++k) {
    const double value = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n);
    values.push_back(value);
    if (k > 0 && 2 * k < n) values.push_back(value);
  }
  std::sort(values.rbegin(), values.rend());
  return values;
}

}  // namespace

TEST_CASE("closed-form cycle eigenpairs") {
  SUBCASE("n=4, k=2: eigenvalue 4, alternating cosine, vanishing sine") {
    const auto pair = cycle_eigenpair(4, 2);
    CHECK(pair.eigenvalue == doctest::Approx(4.0));
    for (int v = 0; v < 4; ++v) {
      CHECK(pair.cosine[v] == doctest::Approx(v % 2 == 0 ? 1.0 : -1.0));
      CHECK(std::abs(pair.sine[v]) <= 1e-15);
    }
  }

  SUBCASE("n=101, k=50: eigenvalue 2 + 2cos(pi/101)") {
    const auto pair = cycle_eigenpair(101, 50);
    CHECK(pair.eigenvalue == doctest::Approx(2.0 + 2.0 * std::cos(std::numbers::pi / 101)).epsilon(1e-15));
  }

  SUBCASE("n=6, k=0: constant cosine at eigenvalue 0") {
    const auto pair = cycle_eigenpair(6, 0);
    CHECK(pair.eigenvalue == 0.0);
    for (int v = 0; v < 6; ++v) {
      CHECK(pair.cosine[v] == 1.0);
      CHECK(pair.sine[v] == 0.0);
    }
  }

  SUBCASE("frequency bounds") {
    CHECK_THROWS_AS(cycle_eigenpair(6, 4), InvalidParameter);
    CHECK_THROWS_AS(cycle_eigenpair(6, -1), InvalidParameter);
    CHECK_THROWS_AS(cycle_eigenpair(2, 0), InvalidParameter);
  }
}

TEST_CASE("oracle vectors are eigenvectors of the generated cycle") {
  for (int n : {5, 12, 101}) {
    const Graph g = make_cycle(n);
    for (int k = 0; 2 * k <= n; ++k) {
      const auto pair = cycle_eigenpair(n, k);
      if (pair.sine.norm() > 0.0) {
        CHECK((apply_laplacian(g, pair.sine) - pair.eigenvalue * pair.sine).cwiseAbs().maxCoeff() <=
              1e-10);
      }
      CHECK((apply_laplacian(g, pair.cosine) - pair.eigenvalue * pair.cosine).cwiseAbs().maxCoeff() <=
            1e-10);
    }
  }
}

TEST_CASE("oracle norm bookkeeping") {
  for (int n : {5, 12, 101}) {
    for (int k = 1; 2 * k < n; ++k) {
      const auto pair = cycle_eigenpair(n, k);
      CHECK(pair.sine.squaredNorm() == doctest::Approx(n / 2.0).epsilon(1e-10));
      CHECK(pair.cosine.squaredNorm() == doctest::Approx(n / 2.0).epsilon(1e-10));
      CHECK(std::abs(pair.sine.dot(pair.cosine)) <= 1e-10);
    }
  }
  // degenerate frequencies vanish identically
  CHECK(cycle_eigenpair(12, 0).sine.cwiseAbs().maxCoeff() == 0.0);
  CHECK(cycle_eigenpair(12, 6).sine.cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("numeric cycle spectra match the closed forms with multiplicities") {
  for (int n : {5, 12, 101}) {
    const auto dec = decompose_laplacian(make_cycle(n));
    const auto expected = cycle_spectrum(n);
    REQUIRE(static_cast<int>(expected.size()) == n);
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(dec.eigenvalues[k] - expected[static_cast<std::size_t>(k)]) <= 1e-9);
    }
  }
}

TEST_CASE("top-pair product identity") {
  SUBCASE("deviation stays at rounding level") {
    for (int n : {5, 101}) {
      const auto identity = top_pair_product_identity(n);
      CHECK(identity.max_deviation <= 1e-12);
    }
  }

  SUBCASE("the product is a frequency-one eigenvector") {
    const auto identity = top_pair_product_identity(7);
    const Graph g = make_cycle(7);
    const double quotient = rayleigh_quotient(g, identity.product, OperatorKind::laplacian);
    CHECK(quotient ==
          doctest::Approx(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / 7)).epsilon(1e-12));
  }

  SUBCASE("even n is rejected") { CHECK_THROWS_AS(top_pair_product_identity(8), InvalidParameter); }
}

TEST_CASE("sharpness experiment against frozen reference values") {
  // reference values computed independently at 50-digit precision
  struct Reference {
    int n;
    double epsilon;
    double actual;
    double bound;
    double ratio;
  };
  const Reference table[] = {
      {51, 0.0037933425259118437, 0.015158980656128483, 0.060664701519551716, 0.24988140181062085},
      {101, 0.00096743541602387016, 0.0038688057328113034, 0.015477094793813568, 0.24996976398682551},
      {201, 0.00024428611869398953, 0.00097708479906817153, 0.0039084585476882593, 0.24999236582567546},
  };
  for (const auto& ref : table) {
    const auto record = sharpness_experiment(ref.n);
    CHECK(record.epsilon == doctest::Approx(ref.epsilon).epsilon(1e-12));
    CHECK(record.actual == doctest::Approx(ref.actual).epsilon(1e-12));
    CHECK(record.bound == doctest::Approx(ref.bound).epsilon(1e-12));
    CHECK(record.ratio == doctest::Approx(ref.ratio).epsilon(1e-12));
    CHECK(record.ratio <= 1.0);
  }

  // the ratio approaches 1/4 from below, tighter with every step
  const double r51 = sharpness_experiment(51).ratio;
  const double r101 = sharpness_experiment(101).ratio;
  const double r201 = sharpness_experiment(201).ratio;
  CHECK(std::abs(r201 - 0.25) < std::abs(r101 - 0.25));
  CHECK(std::abs(r101 - 0.25) < std::abs(r51 - 0.25));
  CHECK(std::abs(r201 - r101) < std::abs(r101 - r51));
  CHECK(std::abs(r201 - 0.25) < 1e-4);

  CHECK_THROWS_AS(sharpness_experiment(100), InvalidParameter);
}
