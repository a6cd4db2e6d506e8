#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "spectral/errors.hpp"

namespace spectral {

// Real-valued signal on the vertices of a graph.
using VertexFunction = Eigen::VectorXd;

// Simple undirected graph on vertices 0..n-1.  Immutable after construction;
// edges are kept sorted with u < v, adjacency lists sorted ascending.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0) throw InvalidParameter("vertex count must be nonnegative");
    adjacency_.resize(static_cast<std::size_t>(n));
  }
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[check_vertex(v)]; }
  int degree(int v) const { return static_cast<int>(adjacency_[check_vertex(v)].size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

 private:
  std::size_t check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InvalidParameter("vertex index out of range");
    return static_cast<std::size_t>(v);
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// ---- generators -----------------------------------------------------------

// Cycle C_n, edges (i, i+1 mod n).  Requires n >= 3.
Graph make_cycle(int n);

// Complete bipartite K_{a,b} with parts {0..a-1} and {a..a+b-1}.
Graph make_complete_bipartite(int a, int b);

// Flower snark J_m (Isaacs): m stars with center c_i and leaves t_i, u_i, v_i,
// an m-cycle on the t's and a 2m-cycle u_0..u_{m-1} v_0..v_{m-1}.
// Vertex layout: c_i = 4i, t_i = 4i+1, u_i = 4i+2, v_i = 4i+3.
// Requires m odd, m >= 5.  Cubic on 4m vertices.
Graph make_flower_snark(int m);

// d-regular graph on 2*half_n vertices with parts A = {0..half_n-1} and
// B = the rest, of which exactly k edges (k even) stay inside a part.
// Built as a union of d random perfect A-B matchings followed by k/2
// degree-preserving 2-swaps; deterministic for a given seed.
Graph mostly_bipartite_random(int half_n, int d, int k, std::uint64_t seed);

// G(n, p): every unordered pair drawn independently with probability p,
// deterministic for a given seed.
Graph erdos_renyi(int n, double p, std::uint64_t seed);

// ---- matrix-free operator application -------------------------------------

VertexFunction apply_adjacency(const Graph& g, const VertexFunction& f);
VertexFunction apply_laplacian(const Graph& g, const VertexFunction& f);  // (D - A) f
VertexFunction apply_signless(const Graph& g, const VertexFunction& f);   // (D + A) f
// One step of the random walk, (A D^{-1}) f; requires every degree >= 1.
VertexFunction apply_walk(const Graph& g, const VertexFunction& f);

// ---- dense operator matrices ----------------------------------------------

Eigen::MatrixXd adjacency_matrix(const Graph& g);
Eigen::MatrixXd laplacian_matrix(const Graph& g);
Eigen::MatrixXd signless_matrix(const Graph& g);

// ---- structure predicates --------------------------------------------------

// Common degree if the graph is regular (vacuously 0 for n = 0).
std::optional<int> regular_degree(const Graph& g);

// BFS 2-coloring: per-vertex colors in {0, 1} when the graph is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

bool is_connected(const Graph& g);

// +1 on color-0 vertices, -1 on color-1 vertices.
VertexFunction cut_vector(const std::vector<int>& colors);

}  // namespace spectral
