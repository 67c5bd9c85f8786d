#ifndef BANDSPEC_GRAPH_HPP
#define BANDSPEC_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bandspec {

/// Three-valued answer for structural claims that are not always decidable
/// from the data we keep (e.g. "is this graph a Cayley graph?").
enum class Tri { Yes, No, Undetermined };

/// Group-theoretic bookkeeping attached to a graph: regular degree,
/// group order and generating-set size when the graph was built as a
/// Cayley graph, composed along sums / products / strong products.
struct CayleyMeta {
  Tri cayley = Tri::Undetermined;
  bool infinite_group = false;
  std::optional<std::uint64_t> group_order;         // when cayley == Yes and finite
  std::optional<std::int64_t> degree;               // regular degree, when regular
  std::optional<std::int64_t> generating_set_size;  // |S|, when cayley != No
};

/// A finite simple undirected graph. Vertices are 0..n-1; the edge list is
/// kept normalized (u < v, sorted, no duplicates). Immutable after
/// construction.
class FiniteGraph {
 public:
  using Edge = std::pair<int, int>;

  FiniteGraph(int n_vertices, std::vector<Edge> edges);
  FiniteGraph(int n_vertices, std::vector<Edge> edges, CayleyMeta meta);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return degrees_[static_cast<std::size_t>(v)]; }

  /// Sorted list of vertex degrees.
  std::vector<int> degree_sequence() const;

  /// Regular degree if all vertices share one, otherwise nullopt.
  std::optional<int> regular_degree() const;

  const CayleyMeta& meta() const { return meta_; }

  /// Dense 0/1 adjacency matrix, row-major n*n.
  std::vector<double> adjacency_matrix() const;

  bool operator==(const FiniteGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  CayleyMeta meta_;
};

// Canonical builders. All reject an empty vertex set.
FiniteGraph complete_graph(int n);
FiniteGraph complete_bipartite(int n);  // K_{n,n}, parts {0..n-1} and {n..2n-1}
FiniteGraph cycle_graph(int m);         // m >= 3
FiniteGraph path_graph(int m);          // m >= 1

/// Cayley graph of the group given by a full multiplication table
/// (table[g][h] = g*h, element 0 is the identity) with respect to a
/// symmetric generating set that excludes the identity. Validates the
/// group axioms and the generating set; throws std::invalid_argument.
FiniteGraph cayley_graph(const std::vector<std::vector<int>>& mult_table,
                         const std::vector<int>& generators);

// Graph compositions on the vertex set V x W with the fixed indexing
// (v, w) -> v * |W| + w.
FiniteGraph graph_sum(const FiniteGraph& g, const FiniteGraph& h);
FiniteGraph graph_product(const FiniteGraph& g, const FiniteGraph& h);
FiniteGraph graph_strong_product(const FiniteGraph& g, const FiniteGraph& h);

bool is_connected(const FiniteGraph& g);

// Metadata composition rules shared with the symbolic expression layer.
CayleyMeta compose_sum_meta(const CayleyMeta& a, const CayleyMeta& b);
CayleyMeta compose_product_meta(const CayleyMeta& a, const CayleyMeta& b);
CayleyMeta compose_strong_meta(const CayleyMeta& a, const CayleyMeta& b);

}  // namespace bandspec

#endif  // BANDSPEC_GRAPH_HPP
