#include "bandspec/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace bandspec {

namespace {

std::vector<FiniteGraph::Edge> normalize_edges(int n,
                                               std::vector<FiniteGraph::Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw std::invalid_argument("loop edge {" + std::to_string(u) + "," +
                                  std::to_string(v) + "} not allowed");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: {" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  "} with n=" + std::to_string(n));
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::optional<std::uint64_t> mul_order(const std::optional<std::uint64_t>& a,
                                       const std::optional<std::uint64_t>& b) {
  if (!a || !b) return std::nullopt;
  if (*a != 0 && *b > std::numeric_limits<std::uint64_t>::max() / *a) return std::nullopt;
  return *a * *b;
}

Tri combine_cayley(Tri a, Tri b, bool product) {
  if (a == Tri::Yes && b == Tri::Yes) return product ? Tri::Undetermined : Tri::Yes;
  return Tri::Undetermined;
}

}  // namespace

// Composition rules for the attached metadata. For the plain product the
// candidate generating set S x T need not generate the product group, so
// the Cayley flag stays undetermined there even for two Cayley factors.
CayleyMeta compose_sum_meta(const CayleyMeta& a, const CayleyMeta& b) {
  CayleyMeta m;
  m.cayley = combine_cayley(a.cayley, b.cayley, false);
  m.infinite_group = a.infinite_group || b.infinite_group;
  if (!m.infinite_group) m.group_order = mul_order(a.group_order, b.group_order);
  if (a.degree && b.degree) m.degree = *a.degree + *b.degree;
  if (a.generating_set_size && b.generating_set_size)
    m.generating_set_size = *a.generating_set_size + *b.generating_set_size;
  return m;
}

CayleyMeta compose_product_meta(const CayleyMeta& a, const CayleyMeta& b) {
  CayleyMeta m;
  m.cayley = combine_cayley(a.cayley, b.cayley, true);
  m.infinite_group = a.infinite_group || b.infinite_group;
  if (!m.infinite_group) m.group_order = mul_order(a.group_order, b.group_order);
  if (a.degree && b.degree) m.degree = *a.degree * *b.degree;
  if (a.generating_set_size && b.generating_set_size)
    m.generating_set_size = *a.generating_set_size * *b.generating_set_size;
  return m;
}

CayleyMeta compose_strong_meta(const CayleyMeta& a, const CayleyMeta& b) {
  CayleyMeta m;
  m.cayley = combine_cayley(a.cayley, b.cayley, false);
  m.infinite_group = a.infinite_group || b.infinite_group;
  if (!m.infinite_group) m.group_order = mul_order(a.group_order, b.group_order);
  if (a.degree && b.degree) m.degree = *a.degree + *b.degree + *a.degree * *b.degree;
  if (a.generating_set_size && b.generating_set_size)
    m.generating_set_size = *a.generating_set_size + *b.generating_set_size +
                            *a.generating_set_size * *b.generating_set_size;
  return m;
}

FiniteGraph::FiniteGraph(int n_vertices, std::vector<Edge> edges)
    : FiniteGraph(n_vertices, std::move(edges), CayleyMeta{}) {}

FiniteGraph::FiniteGraph(int n_vertices, std::vector<Edge> edges, CayleyMeta meta)
    : n_(n_vertices), meta_(meta) {
  if (n_vertices <= 0) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  edges_ = normalize_edges(n_vertices, std::move(edges));
  degrees_.assign(static_cast<std::size_t>(n_), 0);
  for (const auto& [u, v] : edges_) {
    ++degrees_[static_cast<std::size_t>(u)];
    ++degrees_[static_cast<std::size_t>(v)];
  }
  if (!meta_.degree) meta_.degree = regular_degree();
  // A Cayley graph is vertex-transitive, hence regular.
  if (!regular_degree().has_value()) meta_.cayley = Tri::No;
}

bool FiniteGraph::has_edge(int u, int v) const {
  if (u == v) return false;
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> FiniteGraph::degree_sequence() const {
  std::vector<int> seq = degrees_;
  std::sort(seq.begin(), seq.end());
  return seq;
}

std::optional<int> FiniteGraph::regular_degree() const {
  int k = degrees_[0];
  for (int d : degrees_)
    if (d != k) return std::nullopt;
  return k;
}

std::vector<double> FiniteGraph::adjacency_matrix() const {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<double> a(n * n, 0.0);
  for (const auto& [u, v] : edges_) {
    a[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = 1.0;
    a[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = 1.0;
  }
  return a;
}

FiniteGraph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<FiniteGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  CayleyMeta meta;
  meta.cayley = Tri::Yes;
  meta.group_order = static_cast<std::uint64_t>(n);
  meta.degree = n - 1;
  meta.generating_set_size = n - 1;
  return FiniteGraph(n, std::move(edges), meta);
}

FiniteGraph complete_bipartite(int n) {
  if (n < 1) throw std::invalid_argument("complete_bipartite: n must be >= 1");
  std::vector<FiniteGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) edges.push_back({u, n + v});
  CayleyMeta meta;
  meta.cayley = Tri::Yes;
  meta.group_order = static_cast<std::uint64_t>(2 * n);
  meta.degree = n;
  meta.generating_set_size = n;
  return FiniteGraph(2 * n, std::move(edges), meta);
}

FiniteGraph cycle_graph(int m) {
  if (m < 3) throw std::invalid_argument("cycle_graph: m must be >= 3");
  std::vector<FiniteGraph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int v = 0; v < m; ++v) edges.push_back({v, (v + 1) % m});
  CayleyMeta meta;
  meta.cayley = Tri::Yes;
  meta.group_order = static_cast<std::uint64_t>(m);
  meta.degree = 2;
  meta.generating_set_size = 2;
  return FiniteGraph(m, std::move(edges), meta);
}

FiniteGraph path_graph(int m) {
  if (m < 1) throw std::invalid_argument("path_graph: m must be >= 1");
  std::vector<FiniteGraph::Edge> edges;
  for (int v = 0; v + 1 < m; ++v) edges.push_back({v, v + 1});
  CayleyMeta meta;
  if (m <= 2) {
    // P_1 = K_1 and P_2 = K_2; longer paths are not regular.
    meta.cayley = Tri::Yes;
    meta.group_order = static_cast<std::uint64_t>(m);
    meta.degree = m - 1;
    meta.generating_set_size = m - 1;
  } else {
    meta.cayley = Tri::No;
  }
  return FiniteGraph(m, std::move(edges), meta);
}

FiniteGraph cayley_graph(const std::vector<std::vector<int>>& mult_table,
                         const std::vector<int>& generators) {
  const int order = static_cast<int>(mult_table.size());
  if (order < 1) throw std::invalid_argument("cayley_graph: empty multiplication table");
  for (const auto& row : mult_table) {
    if (static_cast<int>(row.size()) != order)
      throw std::invalid_argument("cayley_graph: multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= order)
        throw std::invalid_argument("cayley_graph: table entry out of range");
  }
  // Element 0 must act as the identity.
  for (int g = 0; g < order; ++g) {
    if (mult_table[0][static_cast<std::size_t>(g)] != g ||
        mult_table[static_cast<std::size_t>(g)][0] != g)
      throw std::invalid_argument("cayley_graph: element 0 is not an identity");
  }
  // Inverses: for each g some h with g*h = h*g = 0.
  std::vector<int> inverse(static_cast<std::size_t>(order), -1);
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      if (mult_table[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] == 0 &&
          mult_table[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)] == 0) {
        inverse[static_cast<std::size_t>(g)] = h;
        break;
      }
    }
    if (inverse[static_cast<std::size_t>(g)] < 0)
      throw std::invalid_argument("cayley_graph: element " + std::to_string(g) +
                                  " has no inverse");
  }
  // Associativity over all triples; inputs are desk-scale tables.
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      for (int c = 0; c < order; ++c) {
        const int ab = mult_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        const int bc = mult_table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        if (mult_table[static_cast<std::size_t>(ab)][static_cast<std::size_t>(c)] !=
            mult_table[static_cast<std::size_t>(a)][static_cast<std::size_t>(bc)])
          throw std::invalid_argument("cayley_graph: multiplication table is not associative");
      }

  std::vector<char> in_set(static_cast<std::size_t>(order), 0);
  for (int s : generators) {
    if (s <= 0 || s >= order)
      throw std::invalid_argument("cayley_graph: generator out of range (identity excluded)");
    in_set[static_cast<std::size_t>(s)] = 1;
  }
  int set_size = 0;
  for (int s = 0; s < order; ++s) set_size += in_set[static_cast<std::size_t>(s)];
  for (int s = 0; s < order; ++s) {
    if (in_set[static_cast<std::size_t>(s)] && !in_set[static_cast<std::size_t>(inverse[static_cast<std::size_t>(s)])])
      throw std::invalid_argument("cayley_graph: generating set not closed under inverses");
  }

  std::vector<FiniteGraph::Edge> edges;
  for (int g = 0; g < order; ++g)
    for (int s = 0; s < order; ++s)
      if (in_set[static_cast<std::size_t>(s)])
        edges.push_back({g, mult_table[static_cast<std::size_t>(g)][static_cast<std::size_t>(s)]});
  CayleyMeta meta;
  meta.cayley = Tri::Yes;
  meta.group_order = static_cast<std::uint64_t>(order);
  meta.degree = set_size;
  meta.generating_set_size = set_size;
  return FiniteGraph(order, std::move(edges), meta);
}

FiniteGraph graph_sum(const FiniteGraph& g, const FiniteGraph& h) {
  const int nw = h.vertex_count();
  std::vector<FiniteGraph::Edge> edges;
  edges.reserve(g.edge_count() * static_cast<std::size_t>(nw) +
                h.edge_count() * static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const auto& [w, w2] : h.edges())
      edges.push_back({v * nw + w, v * nw + w2});
  for (const auto& [v, v2] : g.edges())
    for (int w = 0; w < nw; ++w)
      edges.push_back({v * nw + w, v2 * nw + w});
  return FiniteGraph(g.vertex_count() * nw, std::move(edges),
                     compose_sum_meta(g.meta(), h.meta()));
}

FiniteGraph graph_product(const FiniteGraph& g, const FiniteGraph& h) {
  const int nw = h.vertex_count();
  std::vector<FiniteGraph::Edge> edges;
  edges.reserve(2 * g.edge_count() * h.edge_count());
  for (const auto& [v, v2] : g.edges())
    for (const auto& [w, w2] : h.edges()) {
      edges.push_back({v * nw + w, v2 * nw + w2});
      edges.push_back({v * nw + w2, v2 * nw + w});
    }
  return FiniteGraph(g.vertex_count() * nw, std::move(edges),
                     compose_product_meta(g.meta(), h.meta()));
}

FiniteGraph graph_strong_product(const FiniteGraph& g, const FiniteGraph& h) {
  const FiniteGraph sum = graph_sum(g, h);
  const FiniteGraph prod = graph_product(g, h);
  std::vector<FiniteGraph::Edge> edges = sum.edges();
  edges.insert(edges.end(), prod.edges().begin(), prod.edges().end());
  return FiniteGraph(sum.vertex_count(), std::move(edges),
                     compose_strong_meta(g.meta(), h.meta()));
}

bool is_connected(const FiniteGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        frontier.push(u);
      }
    }
  }
  return reached == n;
}

}  // namespace bandspec
