#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spectral/cycle_oracle.hpp"
#include "spectral/graph.hpp"
#include "spectral/io.hpp"
#include "spectral/products.hpp"
#include "spectral/spectra.hpp"

using namespace spectral;

TEST_CASE("hadamard product") {
  const Graph k33 = make_complete_bipartite(3, 3);
  const VertexFunction chi = cut_vector(*bipartition(k33));

  VertexFunction f(3);
  f << 1.5, -2.0, 0.25;
  CHECK(hadamard(f, VertexFunction::Ones(3)) == f);
  CHECK((hadamard(chi, chi) - VertexFunction::Ones(6)).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(hadamard(f, VertexFunction::Ones(4)), InvalidParameter);

  // the top sine/cosine pair on an odd cycle collapses to -x_1/2
  const auto identity = top_pair_product_identity(11);
  const auto top = cycle_eigenpair(11, 5);
  CHECK((hadamard(top.sine, top.cosine) - identity.reference).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("product heatmap") {
  SUBCASE("symmetry, range, and the constant-eigenvector row") {
    const Graph g = make_flower_snark(5);
    const auto dec = decompose_laplacian(g);
    const auto heatmap = product_heatmap(g, dec);
    REQUIRE(heatmap.size() == 20);

    for (Eigen::Index i = 0; i < 20; ++i) {
      for (Eigen::Index j = 0; j < 20; ++j) {
        CHECK(heatmap.values(i, j) == heatmap.values(j, i));
        CHECK(heatmap.undefined(i, j) == heatmap.undefined(j, i));
        if (!heatmap.undefined(i, j)) {
          CHECK(heatmap.values(i, j) >= -1e-9);
          CHECK(heatmap.values(i, j) <= 2.0 * g.max_degree() + 1e-9);
        }
      }
    }

    // product with the constant bottom eigenvector rescales phi_k
    const Eigen::Index last = 19;
    CHECK(!heatmap.undefined(last, last));
    CHECK(std::abs(heatmap.values(last, last)) <= 1e-9);
    for (Eigen::Index k = 0; k < 20; ++k) {
      if (heatmap.undefined(k, last)) continue;
      CHECK(heatmap.values(k, last) == doctest::Approx(dec.eigenvalues[k]).scale(1).epsilon(1e-8));
    }
  }

  SUBCASE("scale invariance of the quotient") {
    const Graph g = make_cycle(9);
    const auto dec = decompose_laplacian(g);
    const auto heatmap = product_heatmap(g, dec);
    const VertexFunction scaled = hadamard(2.0 * dec.eigenvector(1), -3.0 * dec.eigenvector(4));
    const double quotient = rayleigh_quotient(g, scaled, OperatorKind::laplacian);
    CHECK(std::abs(quotient - heatmap.values(1, 4)) <= 1e-10);
  }

  SUBCASE("top degenerate pair of an odd cycle lands on frequency one") {
    const int n = 11;
    const Graph g = make_cycle(n);
    const auto heatmap = product_heatmap(g, decompose_laplacian(g));
    const double expected = 2.0 - 2.0 * std::cos(2.0 * std::numbers::pi / n);
    CHECK(!heatmap.undefined(0, 1));
    CHECK(heatmap.values(0, 1) == doctest::Approx(expected).epsilon(1e-9));
  }

  SUBCASE("mean-zero products of orthogonal eigenvectors") {
    const Graph g = make_flower_snark(5);
    const auto dec = decompose_laplacian(g);
    const VertexFunction ones = VertexFunction::Ones(20);
    for (Eigen::Index i = 0; i < 20; ++i) {
      for (Eigen::Index j = i + 1; j < 20; ++j) {
        const VertexFunction product = hadamard(dec.eigenvector(i), dec.eigenvector(j));
        CHECK(std::abs(product.dot(ones)) <= 1e-9);
      }
    }
  }

  SUBCASE("disjointly supported eigenvectors are masked, not errors") {
    // two disjoint edges with an explicit block eigenbasis
    const Graph g(4, {{0, 1}, {2, 3}});
    EigenDecomposition dec;
    dec.eigenvalues.resize(4);
    dec.eigenvalues << 2.0, 2.0, 0.0, 0.0;
    dec.eigenvectors = Eigen::MatrixXd::Zero(4, 4);
    const double r = 1.0 / std::sqrt(2.0);
    dec.eigenvectors.col(0) << r, -r, 0, 0;
    dec.eigenvectors.col(1) << 0, 0, r, -r;
    dec.eigenvectors.col(2) << r, r, 0, 0;
    dec.eigenvectors.col(3) << 0, 0, r, r;
    const auto heatmap = product_heatmap(g, dec);
    CHECK(heatmap.undefined(0, 1));
    CHECK(heatmap.undefined(2, 3));
    CHECK(!heatmap.undefined(0, 0));
    CHECK(!heatmap.undefined(0, 2));
  }
}

TEST_CASE("sign patterns") {
  SUBCASE("basic signs and the zero band") {
    VertexFunction f(4);
    f << 3.0, -2.0, 1e-12, 0.5;
    const auto pattern = sign_pattern(f, 1e-9);
    CHECK(pattern.signs[0] == 1);
    CHECK(pattern.signs[1] == -1);
    CHECK(pattern.signs[2] == 0);  // below 1e-9 * 3.0
    CHECK(pattern.signs[3] == 1);
  }

  SUBCASE("all-positive vector") {
    const auto pattern = sign_pattern(VertexFunction::Ones(5), 1e-9);
    for (int v = 0; v < 5; ++v) CHECK(pattern.signs[v] == 1);
  }

  SUBCASE("cut vector on K33 and its square") {
    const Graph k33 = make_complete_bipartite(3, 3);
    const VertexFunction chi = cut_vector(*bipartition(k33));
    const auto pattern = sign_pattern(chi, 1e-9);
    for (int v = 0; v < 3; ++v) CHECK(pattern.signs[v] == 1);
    for (int v = 3; v < 6; ++v) CHECK(pattern.signs[v] == -1);
    const auto squared = sign_pattern(hadamard(chi, chi), 1e-9);
    for (int v = 0; v < 6; ++v) CHECK(squared.signs[v] == 1);
  }

  SUBCASE("negative tolerance is rejected") {
    CHECK_THROWS_AS(sign_pattern(VertexFunction::Ones(2), -1.0), InvalidParameter);
  }
}

TEST_CASE("oscillatory products smooth out on the tutte graph") {
  Graph g(0);
  try {
    g = load_named("tutte");
  } catch (const NotProvisioned&) {
    return;  // data directory not available in this environment
  }
  const auto dec = decompose_laplacian(g);
  CHECK(dec.eigenvalues[0] > 5.5);  // close to the ceiling 2d = 6

  const VertexFunction phi = dec.eigenvector(0);
  const VertexFunction psi = dec.eigenvector(1);
  const VertexFunction product = hadamard(phi, psi);

  // the product's quotient collapses far below the factors' eigenvalues
  CHECK(rayleigh_quotient(g, product, OperatorKind::laplacian) < 1.5);

  // and its sign pattern agrees across far more edges than either factor's
  const double agree_phi = edge_sign_agreement(g, sign_pattern(phi, 1e-9)).fraction;
  const double agree_psi = edge_sign_agreement(g, sign_pattern(psi, 1e-9)).fraction;
  const double agree_product = edge_sign_agreement(g, sign_pattern(product, 1e-9)).fraction;
  CHECK(agree_product > agree_phi);
  CHECK(agree_product > agree_psi);
}

TEST_CASE("edge sign agreement") {
  const Graph k33 = make_complete_bipartite(3, 3);

  SUBCASE("constant sign agrees everywhere") {
    const auto result = edge_sign_agreement(k33, sign_pattern(VertexFunction::Ones(6), 1e-9));
    CHECK(result.fraction == 1.0);
    CHECK(result.counted == 9);
    CHECK(result.excluded == 0);
  }

  SUBCASE("bipartite cut vector agrees nowhere") {
    const VertexFunction chi = cut_vector(*bipartition(k33));
    const auto result = edge_sign_agreement(k33, sign_pattern(chi, 1e-9));
    CHECK(result.fraction == 0.0);
    CHECK(result.agreeing == 0);
  }

  SUBCASE("zero-sign vertices are excluded from both sides") {
    VertexFunction f(6);
    f << 1.0, 1.0, 0.0, 1.0, 1.0, 1.0;
    const auto result = edge_sign_agreement(k33, sign_pattern(f, 1e-9));
    CHECK(result.excluded == 3);  // the three edges at the zeroed vertex
    CHECK(result.counted == 6);
    CHECK(result.fraction == 1.0);
  }

  SUBCASE("all edges excluded is an error") {
    CHECK_THROWS_AS(edge_sign_agreement(k33, sign_pattern(VertexFunction::Zero(6), 1e-9)),
                    DegenerateInput);
  }
}
