#include "spectral/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>

namespace spectral {
namespace {

constexpr int kRetryCap = 1000;  // rejection-sampling budget per matching/swap

// Uniform integer in [0, n) from raw engine output, rejection-sampled so the
// result only depends on the documented mt19937_64 stream.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % n;
}

// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void fisher_yates(std::mt19937_64& rng, std::vector<int>& perm) {
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  }
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InvalidParameter("vertex count must be nonnegative");
  for (auto& [u, v] : edges) {
    if (u == v) throw InvalidParameter("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw InvalidParameter("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InvalidParameter("duplicate edge");
  }
  edges_ = std::move(edges);
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges_) {
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& list : adjacency_) d = std::max(d, static_cast<int>(list.size()));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  const auto nb = neighbors(u);
  check_vertex(v);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph make_cycle(int n) {
  if (n < 3) throw InvalidParameter("cycle needs n >= 3");
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidParameter("complete bipartite needs a, b >= 1");
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, std::move(edges));
}

Graph make_flower_snark(int m) {
  if (m < 5 || m % 2 == 0) throw InvalidParameter("flower snark needs odd m >= 5");
  const auto c = [](int i) { return 4 * i; };
  const auto t = [](int i) { return 4 * i + 1; };
  const auto u = [](int i) { return 4 * i + 2; };
  const auto v = [](int i) { return 4 * i + 3; };
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(6 * m));
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(c(i), t(i));
    edges.emplace_back(c(i), u(i));
    edges.emplace_back(c(i), v(i));
    edges.emplace_back(t(i), t((i + 1) % m));
  }
  // 2m-cycle u_0 .. u_{m-1} v_0 .. v_{m-1} u_0
  for (int i = 0; i + 1 < m; ++i) {
    edges.emplace_back(u(i), u(i + 1));
    edges.emplace_back(v(i), v(i + 1));
  }
  edges.emplace_back(u(m - 1), v(0));
  edges.emplace_back(v(m - 1), u(0));
  return Graph(4 * m, std::move(edges));
}

Graph mostly_bipartite_random(int half_n, int d, int k, std::uint64_t seed) {
  if (half_n < 1 || d < 1 || d > half_n) {
    throw InvalidParameter("mostly bipartite: need 1 <= d <= half_n");
  }
  if (k < 0 || k % 2 != 0) throw InvalidParameter("mostly bipartite: k must be even and >= 0");
  if (k > d * half_n / 2) throw InvalidParameter("mostly bipartite: k exceeds d*half_n/2");

  std::mt19937_64 rng(seed);
  std::set<Graph::Edge> edge_set;
  std::vector<Graph::Edge> cross;  // current between-part edges, swap candidates

  // Union of d random perfect matchings A -> B; a matching colliding with an
  // earlier one is resampled wholesale.
  for (int r = 0; r < d; ++r) {
    bool placed = false;
    for (int attempt = 0; attempt < kRetryCap && !placed; ++attempt) {
      std::vector<int> perm(static_cast<std::size_t>(half_n));
      for (int i = 0; i < half_n; ++i) perm[static_cast<std::size_t>(i)] = i;
      fisher_yates(rng, perm);
      bool clash = false;
      for (int i = 0; i < half_n && !clash; ++i) {
        clash = edge_set.contains({i, half_n + perm[static_cast<std::size_t>(i)]});
      }
      if (clash) continue;
      for (int i = 0; i < half_n; ++i) {
        Graph::Edge e{i, half_n + perm[static_cast<std::size_t>(i)]};
        edge_set.insert(e);
        cross.push_back(e);
      }
      placed = true;
    }
    if (!placed) throw ConstructionFailure("mostly bipartite: matching retries exhausted");
  }

  // k/2 swaps: cross edges (a1,b1),(a2,b2) -> within-part edges (a1,a2),(b1,b2).
  for (int s = 0; s < k / 2; ++s) {
    bool swapped = false;
    for (int attempt = 0; attempt < kRetryCap && !swapped; ++attempt) {
      const auto i = static_cast<std::size_t>(uniform_below(rng, cross.size()));
      const auto j = static_cast<std::size_t>(uniform_below(rng, cross.size()));
      if (i == j) continue;
      const auto [a1, b1] = cross[i];
      const auto [a2, b2] = cross[j];
      if (a1 == a2 || b1 == b2) continue;
      const Graph::Edge ea{std::min(a1, a2), std::max(a1, a2)};
      const Graph::Edge eb{std::min(b1, b2), std::max(b1, b2)};
      if (edge_set.contains(ea) || edge_set.contains(eb)) continue;
      edge_set.erase({a1, b1});
      edge_set.erase({a2, b2});
      edge_set.insert(ea);
      edge_set.insert(eb);
      if (i < j) {
        cross.erase(cross.begin() + static_cast<std::ptrdiff_t>(j));
        cross.erase(cross.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        cross.erase(cross.begin() + static_cast<std::ptrdiff_t>(i));
        cross.erase(cross.begin() + static_cast<std::ptrdiff_t>(j));
      }
      swapped = true;
    }
    if (!swapped) throw ConstructionFailure("mostly bipartite: swap retries exhausted");
  }

  return Graph(2 * half_n, {edge_set.begin(), edge_set.end()});
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InvalidParameter("erdos renyi: n must be nonnegative");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("erdos renyi: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Graph::Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

namespace {

void check_length(const Graph& g, const VertexFunction& f) {
  if (f.size() != g.vertex_count()) {
    throw InvalidParameter("vertex function length does not match graph");
  }
}

}  // namespace

VertexFunction apply_adjacency(const Graph& g, const VertexFunction& f) {
  check_length(g, f);
  VertexFunction out = VertexFunction::Zero(f.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    double acc = 0.0;
    for (int w : g.neighbors(v)) acc += f[w];
    out[v] = acc;
  }
  return out;
}

VertexFunction apply_laplacian(const Graph& g, const VertexFunction& f) {
  check_length(g, f);
  VertexFunction out(f.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    double acc = g.degree(v) * f[v];
    for (int w : g.neighbors(v)) acc -= f[w];
    out[v] = acc;
  }
  return out;
}

VertexFunction apply_signless(const Graph& g, const VertexFunction& f) {
  check_length(g, f);
  VertexFunction out(f.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    double acc = g.degree(v) * f[v];
    for (int w : g.neighbors(v)) acc += f[w];
    out[v] = acc;
  }
  return out;
}

VertexFunction apply_walk(const Graph& g, const VertexFunction& f) {
  check_length(g, f);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 0) {
      throw DegenerateInput("walk operator undefined: vertex " + std::to_string(v) + " is isolated");
    }
  }
  // (A D^{-1} f)(i) = sum_{j ~ i} f(j) / deg(j)
  VertexFunction out = VertexFunction::Zero(f.size());
  for (int v = 0; v < g.vertex_count(); ++v) {
    double acc = 0.0;
    for (int w : g.neighbors(v)) acc += f[w] / g.degree(w);
    out[v] = acc;
  }
  return out;
}

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

Eigen::MatrixXd laplacian_matrix(const Graph& g) {
  Eigen::MatrixXd m = -adjacency_matrix(g);
  for (int v = 0; v < g.vertex_count(); ++v) m(v, v) = g.degree(v);
  return m;
}

Eigen::MatrixXd signless_matrix(const Graph& g) {
  Eigen::MatrixXd m = adjacency_matrix(g);
  for (int v = 0; v < g.vertex_count(); ++v) m(v, v) = g.degree(v);
  return m;
}

std::optional<int> regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  const int d = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int root = 0; root < n; ++root) {
    if (color[static_cast<std::size_t>(root)] != -1) continue;
    color[static_cast<std::size_t>(root)] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int w : g.neighbors(v)) {
        auto& cw = color[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - color[static_cast<std::size_t>(v)];
          queue.push(w);
        } else if (cw == color[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push(w);
      }
    }
  }
  return reached == n;
}

VertexFunction cut_vector(const std::vector<int>& colors) {
  VertexFunction chi(static_cast<Eigen::Index>(colors.size()));
  for (std::size_t v = 0; v < colors.size(); ++v) {
    chi[static_cast<Eigen::Index>(v)] = colors[v] == 0 ? 1.0 : -1.0;
  }
  return chi;
}

}  // namespace spectral
