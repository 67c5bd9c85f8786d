#include "bandspec/verify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "bandspec/errors.hpp"

namespace bandspec {

namespace {

constexpr std::uint64_t kSizeMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSizeMax / a) return kSizeMax;
  return a * b;
}

std::uint64_t tree_ball_size(int q, std::uint64_t min_vertices) {
  std::uint64_t total = 1;
  std::uint64_t generation = static_cast<std::uint64_t>(q);
  while (total < min_vertices) {
    if (total > kSizeMax - generation) return kSizeMax;
    total += generation;
    generation = saturating_mul(generation, static_cast<std::uint64_t>(q - 1));
  }
  return total;
}

}  // namespace

std::uint64_t materialized_size(const GraphExpr& e, int truncation) {
  switch (e.kind()) {
    case GraphExpr::Kind::Literal:
      return static_cast<std::uint64_t>(e.graph().vertex_count());
    case GraphExpr::Kind::Line:
      return static_cast<std::uint64_t>(truncation);
    case GraphExpr::Kind::Lattice: {
      std::uint64_t s = 1;
      for (int i = 0; i < e.param(); ++i)
        s = saturating_mul(s, static_cast<std::uint64_t>(truncation));
      return s;
    }
    case GraphExpr::Kind::Tree:
      return tree_ball_size(e.param(), static_cast<std::uint64_t>(truncation));
    case GraphExpr::Kind::Sum:
    case GraphExpr::Kind::Product:
    case GraphExpr::Kind::Strong:
      return saturating_mul(materialized_size(*e.left(), truncation),
                            materialized_size(*e.right(), truncation));
    case GraphExpr::Kind::Repeat: {
      const std::uint64_t child = materialized_size(*e.left(), truncation);
      std::uint64_t s = 1;
      for (int i = 0; i < e.param(); ++i) s = saturating_mul(s, child);
      return s;
    }
  }
  throw std::logic_error("materialized_size: unreachable");
}

FiniteGraph tree_ball(int q, int min_vertices) {
  if (q < 3) throw std::invalid_argument("tree_ball: degree must be >= 3");
  if (min_vertices < 1) throw std::invalid_argument("tree_ball: need >= 1 vertex");
  std::vector<FiniteGraph::Edge> edges;
  std::vector<int> frontier = {0};
  int next = 1;
  bool at_root = true;
  while (next < min_vertices) {
    std::vector<int> grown;
    for (int v : frontier) {
      const int children = at_root ? q : q - 1;
      for (int c = 0; c < children; ++c) {
        edges.push_back({v, next});
        grown.push_back(next);
        ++next;
      }
    }
    at_root = false;
    frontier = std::move(grown);
  }
  return FiniteGraph(next, std::move(edges));
}

namespace {

FiniteGraph materialize_node(const GraphExpr& e, int truncation) {
  switch (e.kind()) {
    case GraphExpr::Kind::Literal:
      return e.graph();
    case GraphExpr::Kind::Line:
      return cycle_graph(truncation);
    case GraphExpr::Kind::Lattice: {
      const FiniteGraph ring = cycle_graph(truncation);
      FiniteGraph acc = ring;
      for (int i = 1; i < e.param(); ++i) acc = graph_sum(ring, acc);
      return acc;
    }
    case GraphExpr::Kind::Tree:
      return tree_ball(e.param(), truncation);
    case GraphExpr::Kind::Sum:
      return graph_sum(materialize_node(*e.left(), truncation),
                       materialize_node(*e.right(), truncation));
    case GraphExpr::Kind::Product:
      return graph_product(materialize_node(*e.left(), truncation),
                           materialize_node(*e.right(), truncation));
    case GraphExpr::Kind::Strong:
      return graph_strong_product(materialize_node(*e.left(), truncation),
                                  materialize_node(*e.right(), truncation));
    case GraphExpr::Kind::Repeat: {
      const FiniteGraph child = materialize_node(*e.left(), truncation);
      FiniteGraph acc = child;
      for (int i = 1; i < e.param(); ++i) acc = graph_sum(child, acc);
      return acc;
    }
  }
  throw std::logic_error("materialize: unreachable");
}

}  // namespace

FiniteGraph materialize(const GraphExpr& e, int truncation, std::uint64_t vertex_cap) {
  if (truncation < 3)
    throw std::invalid_argument("materialize: truncation must be >= 3");
  const std::uint64_t size = materialized_size(e, truncation);
  if (size > vertex_cap) throw CapExceededError(size, vertex_cap);
  return materialize_node(e, truncation);
}

VerificationReport check_spectrum(std::string expression, int truncation,
                                  int vertex_count, SpectrumSet predicted,
                                  EigenSpectrum computed, double tol) {
  VerificationReport report;
  report.expression = std::move(expression);
  report.truncation = truncation;
  report.vertex_count = vertex_count;
  report.predicted = std::move(predicted);
  report.computed = std::move(computed);

  const std::vector<double>& values = report.computed.values;
  for (double v : values) {
    const double dist = report.predicted.distance_to(v);
    if (dist > tol) report.violations.push_back({v, dist});
  }

  const auto nearest_distance = [&values](double x) {
    const auto it = std::lower_bound(values.begin(), values.end(), x);
    double best = std::numeric_limits<double>::infinity();
    if (it != values.end()) best = *it - x;
    if (it != values.begin()) best = std::min(best, x - *(it - 1));
    return best;
  };

  const auto& bands = report.predicted.intervals();
  for (std::size_t i = 0; i < bands.size(); ++i) {
    const auto lo = std::lower_bound(values.begin(), values.end(), bands[i].lo - tol);
    if (lo == values.end() || *lo > bands[i].hi + tol)
      report.uncovered_bands.push_back(static_cast<int>(i));

    double worst = std::max(nearest_distance(bands[i].lo), nearest_distance(bands[i].hi));
    for (std::size_t j = 0; j + 1 < values.size(); ++j) {
      const double mid = 0.5 * (values[j] + values[j + 1]);
      if (mid >= bands[i].lo && mid <= bands[i].hi)
        worst = std::max(worst, nearest_distance(mid));
    }
    report.max_band_distance = std::max(report.max_band_distance, worst);
  }
  return report;
}

VerificationReport verify_containment(const GraphExpr& e, int truncation, double tol,
                                      std::uint64_t vertex_cap) {
  const FiniteGraph g = materialize(e, truncation, vertex_cap);
  return check_spectrum(to_string(e), truncation, g.vertex_count(), eval_spectrum(e),
                        eigenvalues(g), tol);
}

std::vector<VerificationReport> verify_coverage(const GraphExpr& e,
                                                const std::vector<int>& truncations,
                                                double tol, std::uint64_t vertex_cap) {
  std::vector<VerificationReport> reports;
  reports.reserve(truncations.size());
  for (int t : truncations) reports.push_back(verify_containment(e, t, tol, vertex_cap));
  return reports;
}

}  // namespace bandspec
