#include "bandspec/verify.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bandspec/errors.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace bandspec;
using testutil::Rng;

TEST_CASE("materialize replaces infinite atoms by finite stand-ins") {
  CHECK(materialize(*parse_expr("Line"), 8) == cycle_graph(8));

  const FiniteGraph g = materialize(*parse_expr("Line + 1@K5"), 10);
  CHECK(g.vertex_count() == 50);
  CHECK(g == graph_sum(cycle_graph(10), complete_graph(5)));

  const FiniteGraph torus = materialize(*parse_expr("Lattice2"), 5);
  CHECK(torus.vertex_count() == 25);
  CHECK(torus.regular_degree() == 4);

  // Finite literals pass through untouched regardless of truncation.
  CHECK(materialize(*parse_expr("K4"), 100) == complete_graph(4));

  CHECK_THROWS_AS(materialize(*parse_expr("Line"), 2), std::invalid_argument);
}

TEST_CASE("materialized size and the vertex cap") {
  CHECK(materialized_size(*parse_expr("Lattice3"), 32) == 32768);
  CHECK(materialized_size(*parse_expr("Line + 1@K5"), 10) == 50);
  CHECK(materialized_size(*parse_expr("2@K5"), 3) == 25);

  try {
    materialize(*parse_expr("Lattice3"), 32);
    FAIL("cap should have been enforced");
  } catch (const CapExceededError& e) {
    CHECK(e.required_vertices() == 32768);
  }
  // A raised cap admits the same expression.
  CHECK(materialize(*parse_expr("Lattice2"), 60, 3600).vertex_count() == 3600);
}

TEST_CASE("tree balls") {
  // Ball sizes for degree 3: 1, 4, 10, 22, ... complete generations only.
  const FiniteGraph b = tree_ball(3, 5);
  CHECK(b.vertex_count() == 10);
  CHECK(b.edge_count() == 9);  // a tree
  CHECK(is_connected(b));
  CHECK(b.degree(0) == 3);
  CHECK(b.degree_sequence().back() == 3);

  CHECK(tree_ball(3, 10).vertex_count() == 10);
  CHECK(tree_ball(3, 11).vertex_count() == 22);
  CHECK(tree_ball(4, 6).vertex_count() == 17);  // 1 + 4 + 12

  CHECK_THROWS_AS(tree_ball(2, 5), std::invalid_argument);

  // Spectral radius of any finite ball stays below the band edge.
  for (int q : {3, 4, 6}) {
    const double edge = 2.0 * std::sqrt(q - 1.0);
    for (int min_vertices : {10, 60, 300})
      CHECK(spectral_radius(tree_ball(q, min_vertices)) <= edge + 1e-8);
  }
}

TEST_CASE("report assembly flags misses, gaps in coverage, and distances") {
  EigenSpectrum computed;
  computed.values = {0.0, 0.5, 1.0, 2.0};
  computed.multiplicities = {1, 1, 1, 1};
  computed.dimension = 4;

  const VerificationReport r = check_spectrum(
      "synthetic", 0, 4, SpectrumSet({{0.0, 1.0}, {5.0, 6.0}}), computed, 1e-8);
  CHECK(!r.passed());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].eigenvalue == 2.0);
  CHECK(r.violations[0].distance == 1.0);
  CHECK(r.uncovered_bands == std::vector<int>{1});
  // Within [0,1] the worst point is 0.25 or 0.75 (distance 0.25); the
  // empty band [5,6] is 3 away at its right end.
  CHECK(r.max_band_distance == doctest::Approx(4.0));

  const VerificationReport ok = check_spectrum(
      "synthetic", 0, 4, SpectrumSet({{0.0, 1.0}, {2.0, 2.0}}), computed, 1e-8);
  CHECK(ok.passed());
  CHECK(ok.violations.empty());
  CHECK(ok.uncovered_bands.empty());
  CHECK(ok.max_band_distance == doctest::Approx(0.25));
}

TEST_CASE("containment holds for cycle and torus truncations") {
  for (int m : {8, 12, 17}) {
    const VerificationReport r = verify_containment(*parse_expr("Line"), m);
    CHECK(r.passed());
    CHECK(r.vertex_count == m);
  }
  CHECK(verify_containment(*parse_expr("Lattice2"), 9).passed());
  CHECK(verify_containment(*parse_expr("Line + 2@K5"), 12).passed());
  CHECK(verify_containment(*parse_expr("Line * K3"), 12).passed());
  CHECK(verify_containment(*parse_expr("Tree3"), 100).passed());
}

TEST_CASE("containment on finite expressions is tight") {
  Rng rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const ExprPtr e = testutil::random_finite_expr(rng, 1 + rng.below(4));
    const VerificationReport r = verify_containment(*e, 3, 1e-9);
    CHECK(r.passed());
    CHECK(r.uncovered_bands.empty());
    CHECK(r.max_band_distance <= 1e-10);  // atoms are hit to solver accuracy
  }
}

TEST_CASE("a wrong prediction is caught") {
  // Hand-built literal carrying a bogus closed form: K_5 does not have
  // spectrum {0}.
  const ExprPtr bogus =
      GraphExpr::literal(complete_graph(5), SpectrumSet::point(0.0), "bogus");
  const VerificationReport r = verify_containment(*bogus, 3);
  CHECK(!r.passed());
  CHECK(r.violations.size() == 2);  // -1 and 4 both miss {0}
  CHECK(r.violations[0].distance == doctest::Approx(1.0));
  CHECK(r.violations[1].distance == doctest::Approx(4.0));
}

TEST_CASE("coverage tightens as cycle truncations grow") {
  const std::vector<VerificationReport> rs =
      verify_coverage(*parse_expr("Line + 1@K5"), {8, 16, 32});
  REQUIRE(rs.size() == 3);
  for (const auto& r : rs) CHECK(r.passed());
  CHECK(rs[0].max_band_distance > rs[1].max_band_distance);
  CHECK(rs[1].max_band_distance > rs[2].max_band_distance);

  // C_8 eigenvalues {2, sqrt2, 0, -sqrt2, -2}: the worst covered point sits
  // halfway between consecutive values, sqrt(2)/2 away. At m=16 the widest
  // gap runs from 2cos(3pi/8) to 0, so the radius is cos(3pi/8).
  CHECK(rs[0].max_band_distance == doctest::Approx(std::sqrt(2.0) / 2).epsilon(1e-9));
  CHECK(rs[1].max_band_distance ==
        doctest::Approx(std::cos(3 * std::numbers::pi / 8)).epsilon(1e-9));
}

TEST_CASE("gap witness: no eigenvalue enters a predicted gap") {
  for (int n : {5, 6})
    for (int N : {1, 2}) {
      const std::string text =
          "Line + " + std::to_string(N) + "@K" + std::to_string(n);
      const ExprPtr e = parse_expr(text);
      const VerificationReport r = verify_containment(*e, 12);
      CHECK(r.passed());
      const auto& bands = r.predicted.intervals();
      const double margin = (n - 4.0) / 2.0 - 1e-8;
      for (std::size_t i = 0; i + 1 < bands.size(); ++i) {
        const double center = 0.5 * (bands[i].hi + bands[i + 1].lo);
        for (double v : r.computed.values)
          CHECK(std::fabs(v - center) >= margin);
      }
    }
}
