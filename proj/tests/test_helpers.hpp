#ifndef BANDSPEC_TEST_HELPERS_HPP
#define BANDSPEC_TEST_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "bandspec/eigensolver.hpp"
#include "bandspec/expr.hpp"
#include "bandspec/graph.hpp"
#include "bandspec/spectrum_set.hpp"

namespace testutil {

// splitmix64. std <random> distributions are implementation-defined, so
// tests roll their own bits to stay reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::uint64_t state_;
};

inline bandspec::FiniteGraph random_graph(Rng& rng, int n, double p) {
  std::vector<bandspec::FiniteGraph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) edges.push_back({u, v});
  return bandspec::FiniteGraph(n, std::move(edges));
}

// Random spanning tree (each vertex hooks onto an earlier one) plus extras.
inline bandspec::FiniteGraph random_connected_graph(Rng& rng, int n, double extra_p) {
  std::vector<bandspec::FiniteGraph::Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({rng.below(v), v});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < extra_p) edges.push_back({u, v});
  return bandspec::FiniteGraph(n, std::move(edges));
}

inline bandspec::SpectrumSet random_spectrum(Rng& rng, int max_intervals) {
  const int k = 1 + rng.below(max_intervals);
  std::vector<bandspec::SpectrumSet::Interval> intervals;
  for (int i = 0; i < k; ++i) {
    const double lo = -10.0 + 20.0 * rng.unit();
    const double len = rng.coin() ? 0.0 : 3.0 * rng.unit();
    intervals.push_back({lo, lo + len});
  }
  return bandspec::SpectrumSet(std::move(intervals));
}

// All n eigenvalues (with multiplicity) of g's adjacency matrix, ascending.
inline std::vector<double> full_eigenvalues(const bandspec::FiniteGraph& g) {
  return bandspec::symmetric_eigenvalues(g.adjacency_matrix(), g.vertex_count());
}

// Random expression tree over finite literals of at most 5 vertices each,
// with exactly `leaves` leaves joined by sum / product / strong nodes.
// Worst-case materialized size with 4 leaves is 5^4 = 625 vertices.
inline bandspec::ExprPtr random_finite_expr(Rng& rng, int leaves) {
  if (leaves <= 1) {
    static const char* const atoms[] = {"K2", "K3", "K4", "K5", "C3", "C4",
                                        "C5", "P2", "P3", "P4", "Kb2"};
    return bandspec::parse_expr(atoms[rng.below(11)]);
  }
  const int left = 1 + rng.below(leaves - 1);
  bandspec::ExprPtr a = random_finite_expr(rng, left);
  bandspec::ExprPtr b = random_finite_expr(rng, leaves - left);
  switch (rng.below(3)) {
    case 0: return bandspec::GraphExpr::sum(std::move(a), std::move(b));
    case 1: return bandspec::GraphExpr::product(std::move(a), std::move(b));
    default: return bandspec::GraphExpr::strong(std::move(a), std::move(b));
  }
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = a.size() == b.size() ? 0.0 : 1e300;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const double d = a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace testutil

#endif  // BANDSPEC_TEST_HELPERS_HPP
