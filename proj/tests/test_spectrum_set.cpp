#include "bandspec/spectrum_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"

using namespace bandspec;
using testutil::Rng;
using Interval = SpectrumSet::Interval;

TEST_CASE("construction normalizes") {
  const SpectrumSet s({{3.0, 4.0}, {0.0, 1.0}, {0.5, 2.0}});
  CHECK(s.intervals() == std::vector<Interval>{{0.0, 2.0}, {3.0, 4.0}});
  CHECK(s.band_count() == 2);
  CHECK(s.min() == 0.0);
  CHECK(s.max() == 4.0);

  // Gaps at or below the merge tolerance fuse; anything larger survives.
  CHECK(SpectrumSet({{0.0, 1.0}, {1.0 + 1e-13, 2.0}}).band_count() == 1);
  CHECK(SpectrumSet({{0.0, 1.0}, {1.0 + 1e-11, 2.0}}).band_count() == 2);

  CHECK_THROWS_AS(SpectrumSet({}), std::invalid_argument);
  CHECK_THROWS_AS(SpectrumSet({{1.0, 0.0}}), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(SpectrumSet({{0.0, inf}}), std::invalid_argument);
}

TEST_CASE("normalization is idempotent") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const SpectrumSet s = testutil::random_spectrum(rng, 6);
    CHECK(SpectrumSet(s.intervals()) == s);
  }
}

TEST_CASE("distance and membership") {
  const SpectrumSet s({{-2.0, 2.0}, {5.0, 5.0}});
  CHECK(s.distance_to(0.0) == 0.0);
  CHECK(s.distance_to(-2.0) == 0.0);
  CHECK(s.distance_to(3.0) == 1.0);
  CHECK(s.distance_to(4.5) == 0.5);
  CHECK(s.distance_to(7.0) == 2.0);
  CHECK(s.contains(2.0000000001, 1e-6));
  CHECK(!s.contains(2.1, 1e-6));
}

TEST_CASE("approximate equality is a two-sided cover") {
  const SpectrumSet whole = SpectrumSet::interval(0.0, 2.0);
  const SpectrumSet split({{0.0, 0.9}, {1.1, 2.0}});
  CHECK(whole.approx_equals(whole, 0.0));
  CHECK(!whole.approx_equals(split, 0.05));  // the point 1.0 is 0.1 away
  CHECK(whole.approx_equals(split, 0.11));
  CHECK(!split.approx_equals(whole, 0.0));  // one-sided cover is not enough
  CHECK(!SpectrumSet::point(0.0).approx_equals(SpectrumSet::point(1.0), 0.5));
  CHECK(SpectrumSet::point(0.0).approx_equals(SpectrumSet::point(1.0), 1.0));
}

TEST_CASE("affine images") {
  // Laplacian of K_4: k - x with k = 3 sends {-1, 3} to {0, 4}.
  const SpectrumSet k4({{-1.0, -1.0}, {3.0, 3.0}});
  CHECK(k4.affine(-1.0, 3.0) == SpectrumSet({{0.0, 0.0}, {4.0, 4.0}}));

  const SpectrumSet line = SpectrumSet::interval(-2.0, 2.0);
  CHECK(line.affine(1.0, 0.0) == line);
  CHECK(line.affine(0.5, 0.0) == SpectrumSet::interval(-1.0, 1.0));
  // Negative scale swaps endpoints.
  CHECK(SpectrumSet::interval(1.0, 3.0).affine(-2.0, 0.0) ==
        SpectrumSet::interval(-6.0, -2.0));
  // Zero scale collapses everything to the shift.
  CHECK(k4.affine(0.0, 7.0) == SpectrumSet::point(7.0));
}

TEST_CASE("minkowski sum") {
  // [-2,2] + {-3, 2, 7, 12}: four disjoint length-4 bands.
  const SpectrumSet line = SpectrumSet::interval(-2.0, 2.0);
  const SpectrumSet atoms({{-3.0, -3.0}, {2.0, 2.0}, {7.0, 7.0}, {12.0, 12.0}});
  CHECK(minkowski_sum(line, atoms) ==
        SpectrumSet({{-5.0, -1.0}, {0.0, 4.0}, {5.0, 9.0}, {10.0, 14.0}}));

  const SpectrumSet s({{-1.0, 0.0}, {2.5, 3.0}});
  CHECK(minkowski_sum(s, SpectrumSet::point(0.0)) == s);
  CHECK(minkowski_sum(SpectrumSet({{-1.0, 0.0}, {0.5, 1.0}}),
                      SpectrumSet::interval(0.0, 0.5)) ==
        SpectrumSet::interval(-1.0, 1.5));
}

TEST_CASE("pointwise product") {
  const SpectrumSet s({{-1.0, 0.0}, {2.5, 3.0}});
  CHECK(pointwise_product(SpectrumSet::point(1.0), s) == s);
  CHECK(pointwise_product(SpectrumSet::interval(-2.0, 2.0),
                          SpectrumSet({{-1.0, -1.0}, {4.0, 4.0}})) ==
        SpectrumSet::interval(-8.0, 8.0));
  CHECK(pointwise_product(s, SpectrumSet::point(0.0)) == SpectrumSet::point(0.0));
}

TEST_CASE("strong combination") {
  const SpectrumSet s({{-1.0, 0.0}, {2.5, 3.0}});
  CHECK(strong_combine(SpectrumSet::point(0.0), s) == s);
  // x = -1 forces x + y + xy = -1 for every y.
  CHECK(strong_combine(SpectrumSet::point(-1.0), s) == SpectrumSet::point(-1.0));
  CHECK(strong_combine(SpectrumSet::interval(1.0, 2.0),
                       SpectrumSet::interval(0.0, 1.0)) ==
        SpectrumSet::interval(1.0, 5.0));
}

TEST_CASE("strong combination matches the shifted product identity") {
  // 1 + z = (1 + x)(1 + y), up to fp rounding of the two routes.
  Rng rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const SpectrumSet s = testutil::random_spectrum(rng, 4);
    const SpectrumSet t = testutil::random_spectrum(rng, 4);
    const SpectrumSet direct = strong_combine(s, t);
    const SpectrumSet shifted =
        pointwise_product(s.affine(1.0, 1.0), t.affine(1.0, 1.0)).affine(1.0, -1.0);
    CHECK(direct.approx_equals(shifted, 1e-9));
  }
}

TEST_CASE("minkowski sum commutes and associates") {
  Rng rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const SpectrumSet a = testutil::random_spectrum(rng, 4);
    const SpectrumSet b = testutil::random_spectrum(rng, 4);
    const SpectrumSet c = testutil::random_spectrum(rng, 3);
    CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
    CHECK(minkowski_sum(minkowski_sum(a, b), c)
              .approx_equals(minkowski_sum(a, minkowski_sum(b, c)), 1e-12));
  }
}

TEST_CASE("from_eigen yields one atom per distinct value") {
  EigenSpectrum e;
  e.values = {-1.0, 4.0};
  e.multiplicities = {4, 1};
  e.dimension = 5;
  CHECK(from_eigen(e) == SpectrumSet({{-1.0, -1.0}, {4.0, 4.0}}));

  EigenSpectrum single;
  single.values = {0.0};
  single.multiplicities = {1};
  single.dimension = 1;
  CHECK(from_eigen(single) == SpectrumSet::point(0.0));
}

namespace {

enum class Rule { Sum, Product, Strong };

double apply_rule(Rule r, double x, double y) {
  switch (r) {
    case Rule::Sum: return x + y;
    case Rule::Product: return x * y;
    default: return x + y + x * y;
  }
}

SpectrumSet combine(Rule r, const SpectrumSet& s, const SpectrumSet& t) {
  switch (r) {
    case Rule::Sum: return minkowski_sum(s, t);
    case Rule::Product: return pointwise_product(s, t);
    default: return strong_combine(s, t);
  }
}

double sample(Rng& rng, const SpectrumSet& s) {
  const auto& iv = s.intervals()[static_cast<std::size_t>(rng.below(s.band_count()))];
  return iv.lo + rng.unit() * (iv.hi - iv.lo);
}

// Image of the box I x J under the rule; bilinear, so spanned by corners.
Interval box_image(Rule r, const Interval& a, const Interval& b) {
  const double c0 = apply_rule(r, a.lo, b.lo);
  const double c1 = apply_rule(r, a.lo, b.hi);
  const double c2 = apply_rule(r, a.hi, b.lo);
  const double c3 = apply_rule(r, a.hi, b.hi);
  return {std::min({c0, c1, c2, c3}), std::max({c0, c1, c2, c3})};
}

}  // namespace

TEST_CASE("sampling oracle: images land inside, gaps are unreachable") {
  Rng rng(34);
  for (Rule rule : {Rule::Sum, Rule::Product, Rule::Strong}) {
    for (int pair = 0; pair < 3; ++pair) {
      const SpectrumSet s = testutil::random_spectrum(rng, 4);
      const SpectrumSet t = testutil::random_spectrum(rng, 4);
      const SpectrumSet result = combine(rule, s, t);

      int inside = 0;
      for (int i = 0; i < 10000; ++i) {
        const double z = apply_rule(rule, sample(rng, s), sample(rng, t));
        if (result.distance_to(z) <= 1e-9) ++inside;
      }
      CHECK(inside == 10000);

      // Points strictly inside gaps must be outside every box image.
      const auto& bands = result.intervals();
      int checked = 0;
      int reachable = 0;
      for (std::size_t g = 0; g + 1 < bands.size() && checked < 10000; ++g) {
        const double lo = bands[g].hi;
        const double hi = bands[g + 1].lo;
        const int per_gap = 10000 / static_cast<int>(bands.size());
        for (int i = 0; i < per_gap; ++i, ++checked) {
          const double z = lo + (hi - lo) * (0.01 + 0.98 * rng.unit());
          for (const auto& a : s.intervals())
            for (const auto& b : t.intervals()) {
              const Interval img = box_image(rule, a, b);
              if (z >= img.lo && z <= img.hi) ++reachable;
            }
        }
      }
      CHECK(reachable == 0);
    }
  }
}
