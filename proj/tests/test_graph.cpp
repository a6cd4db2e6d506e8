#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "spectral/graph.hpp"

using namespace spectral;

namespace {

Graph random_graph(std::uint64_t seed, int max_n = 24) {
  std::mt19937_64 rng(seed);
  const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
  const double p = 0.05 + 0.9 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  return erdos_renyi(n, p, rng());
}

VertexFunction random_function(std::uint64_t seed, int n) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  VertexFunction f(n);
  for (int v = 0; v < n; ++v) f[v] = gauss(rng);
  return f;
}

}  // namespace

TEST_CASE("graph construction validates and normalizes") {
  const Graph g(4, {{2, 1}, {0, 1}, {3, 2}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges() == std::vector<Graph::Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 3));
  CHECK(g.degree(1) == 2);

  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidParameter);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidParameter);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidParameter);
  CHECK_THROWS_AS(Graph(-1), InvalidParameter);
}

TEST_CASE("cycle generator") {
  const Graph triangle = make_cycle(3);
  CHECK(triangle.edge_count() == 3);
  for (int v = 0; v < 3; ++v) CHECK(triangle.degree(v) == 2);

  CHECK(bipartition(make_cycle(4)).has_value());
  const Graph c101 = make_cycle(101);
  CHECK(c101.edge_count() == 101);
  CHECK(!bipartition(c101).has_value());
  CHECK(is_connected(c101));

  CHECK_THROWS_AS(make_cycle(2), InvalidParameter);
}

TEST_CASE("complete bipartite generator") {
  const Graph k22 = make_complete_bipartite(2, 2);
  CHECK(k22.edge_count() == 4);
  CHECK(regular_degree(k22) == 2);
  CHECK(bipartition(k22).has_value());

  const Graph k33 = make_complete_bipartite(3, 3);
  CHECK(k33.edge_count() == 9);
  CHECK(regular_degree(k33) == 3);

  const Graph single = make_complete_bipartite(1, 1);
  CHECK(single.vertex_count() == 2);
  CHECK(single.edge_count() == 1);

  CHECK_THROWS_AS(make_complete_bipartite(0, 3), InvalidParameter);
}

TEST_CASE("flower snark generator") {
  const Graph j5 = make_flower_snark(5);
  CHECK(j5.vertex_count() == 20);
  CHECK(j5.edge_count() == 30);
  CHECK(regular_degree(j5) == 3);
  CHECK(is_connected(j5));

  // the t-vertices 4i+1 form an explicit odd cycle, so no 2-coloring exists
  for (int i = 0; i < 5; ++i) CHECK(j5.has_edge(4 * i + 1, 4 * ((i + 1) % 5) + 1));
  CHECK(!bipartition(j5).has_value());

  const Graph j7 = make_flower_snark(7);
  CHECK(j7.vertex_count() == 28);
  for (int v = 0; v < 28; ++v) CHECK(j7.degree(v) == 3);

  CHECK_THROWS_AS(make_flower_snark(4), InvalidParameter);
  CHECK_THROWS_AS(make_flower_snark(3), InvalidParameter);
}

TEST_CASE("mostly bipartite generator") {
  SUBCASE("k = 0 is exactly bipartite") {
    const Graph g = mostly_bipartite_random(50, 4, 0, 7);
    CHECK(g.vertex_count() == 100);
    CHECK(regular_degree(g) == 4);
    for (const auto& [u, v] : g.edges()) CHECK(((u < 50) != (v < 50)));
  }

  SUBCASE("k = 4 leaves exactly four within-part edges") {
    const Graph g = mostly_bipartite_random(50, 4, 4, 7);
    CHECK(regular_degree(g) == 4);
    int within = 0;
    for (const auto& [u, v] : g.edges()) {
      if ((u < 50) == (v < 50)) ++within;
    }
    CHECK(within == 4);

    // cut-vector quotient by direct edge scan: each within edge contributes 4
    VertexFunction chi(100);
    for (int v = 0; v < 100; ++v) chi[v] = v < 50 ? 1.0 : -1.0;
    double energy = 0.0;
    for (const auto& [u, v] : g.edges()) {
      const double s = chi[u] + chi[v];
      energy += s * s;
    }
    CHECK(energy / chi.squaredNorm() == doctest::Approx(0.16).epsilon(1e-14));
  }

  SUBCASE("deterministic in the seed") {
    const Graph a = mostly_bipartite_random(20, 3, 2, 11);
    const Graph b = mostly_bipartite_random(20, 3, 2, 11);
    CHECK(a.edges() == b.edges());
    const Graph c = mostly_bipartite_random(20, 3, 2, 12);
    CHECK(a.edges() != c.edges());
  }

  SUBCASE("cut quotient is 2k/half_n across parameters") {
    for (const auto& [half_n, d, k] : {std::tuple{20, 3, 2}, {25, 5, 6}, {50, 4, 8}}) {
      const Graph g = mostly_bipartite_random(half_n, d, k, 5);
      VertexFunction chi(2 * half_n);
      for (int v = 0; v < 2 * half_n; ++v) chi[v] = v < half_n ? 1.0 : -1.0;
      double energy = 0.0;
      for (const auto& [u, v] : g.edges()) {
        const double s = chi[u] + chi[v];
        energy += s * s;
      }
      CHECK(energy / chi.squaredNorm() ==
            doctest::Approx(2.0 * k / half_n).epsilon(1e-14));
    }
  }

  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(mostly_bipartite_random(10, 3, 3, 0), InvalidParameter);   // odd k
    CHECK_THROWS_AS(mostly_bipartite_random(4, 5, 0, 0), InvalidParameter);    // d > half_n
    CHECK_THROWS_AS(mostly_bipartite_random(10, 2, 12, 0), InvalidParameter);  // k too large
  }
}

TEST_CASE("erdos renyi generator") {
  CHECK(erdos_renyi(12, 0.0, 3).edge_count() == 0);
  CHECK(erdos_renyi(12, 1.0, 3).edge_count() == 12 * 11 / 2);

  const Graph a = erdos_renyi(30, 0.3, 42);
  const Graph b = erdos_renyi(30, 0.3, 42);
  CHECK(a.edges() == b.edges());
  // regression pin for the documented mt19937_64 draw sequence
  CHECK(a.edge_count() == 129);

  CHECK_THROWS_AS(erdos_renyi(5, 1.5, 0), InvalidParameter);
}

TEST_CASE("operator applications on hand examples") {
  SUBCASE("laplacian annihilates constants") {
    const Graph g = make_flower_snark(5);
    const VertexFunction ones = VertexFunction::Ones(g.vertex_count());
    CHECK(apply_laplacian(g, ones).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("bipartite cut vector is in the signless kernel") {
    const Graph k33 = make_complete_bipartite(3, 3);
    const VertexFunction chi = cut_vector(*bipartition(k33));
    CHECK(apply_signless(k33, chi).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("walk step from a point mass on C4") {
    const Graph c4 = make_cycle(4);
    VertexFunction delta = VertexFunction::Zero(4);
    delta[0] = 1.0;
    const VertexFunction stepped = apply_walk(c4, delta);
    CHECK(stepped[0] == 0.0);
    CHECK(stepped[1] == doctest::Approx(0.5));
    CHECK(stepped[2] == 0.0);
    CHECK(stepped[3] == doctest::Approx(0.5));
  }

  SUBCASE("walk rejects isolated vertices") {
    const Graph g(3, {{0, 1}});
    CHECK_THROWS_AS(apply_walk(g, VertexFunction::Ones(3)), DegenerateInput);
  }

  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(apply_adjacency(make_cycle(4), VertexFunction::Ones(3)), InvalidParameter);
  }
}

TEST_CASE("operator identities on random graphs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Graph g = random_graph(seed);
    const int n = g.vertex_count();
    const VertexFunction f = random_function(seed * 31 + 1, n);

    // adjacency lists and edge set describe the same graph
    int adjacency_total = 0;
    for (int v = 0; v < n; ++v) {
      adjacency_total += g.degree(v);
      for (int w : g.neighbors(v)) CHECK(g.has_edge(v, w));
    }
    CHECK(adjacency_total == 2 * g.edge_count());

    // matrix-free application agrees with the dense operators
    const Eigen::MatrixXd laplacian = laplacian_matrix(g);
    CHECK((apply_laplacian(g, f) - laplacian * f).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((apply_signless(g, f) - signless_matrix(g) * f).cwiseAbs().maxCoeff() < 1e-12);

    // (D - A) + 2A = (D + A), up to reassociation rounding
    const VertexFunction combined = apply_laplacian(g, f) + 2.0 * apply_adjacency(g, f);
    const double scale = std::max(1.0, f.cwiseAbs().maxCoeff() * g.max_degree());
    CHECK((combined - apply_signless(g, f)).cwiseAbs().maxCoeff() <= 1e-12 * scale);

    // quadratic forms are the edge sums of squared differences resp. sums
    double diff_sum = 0.0;
    double plus_sum = 0.0;
    for (const auto& [u, v] : g.edges()) {
      diff_sum += (f[u] - f[v]) * (f[u] - f[v]);
      plus_sum += (f[u] + f[v]) * (f[u] + f[v]);
    }
    CHECK(f.dot(apply_laplacian(g, f)) == doctest::Approx(diff_sum).epsilon(1e-10));
    CHECK(f.dot(apply_signless(g, f)) == doctest::Approx(plus_sum).epsilon(1e-10));

    // column-stochastic walk preserves mass of nonnegative inputs
    bool has_isolated = false;
    for (int v = 0; v < n; ++v) has_isolated = has_isolated || g.degree(v) == 0;
    if (!has_isolated) {
      const VertexFunction mass = f.cwiseAbs();
      CHECK(apply_walk(g, mass).sum() == doctest::Approx(mass.sum()).epsilon(1e-12));
    }
  }
}

TEST_CASE("structure predicates") {
  const Graph c4 = make_cycle(4);
  CHECK(regular_degree(c4) == 2);
  CHECK(is_connected(c4));
  const auto colors = bipartition(c4);
  REQUIRE(colors.has_value());
  for (const auto& [u, v] : c4.edges()) CHECK((*colors)[u] != (*colors)[v]);

  const Graph c5 = make_cycle(5);
  CHECK(regular_degree(c5) == 2);
  CHECK(!bipartition(c5).has_value());

  const Graph disjoint(4, {{0, 1}, {2, 3}});
  CHECK(!is_connected(disjoint));
  CHECK(regular_degree(disjoint) == 1);

  const Graph path(3, {{0, 1}, {1, 2}});
  CHECK(!regular_degree(path).has_value());
}
