#include "bandspec/spectrum_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bandspec {

SpectrumSet::SpectrumSet(std::vector<Interval> intervals) {
  if (intervals.empty())
    throw std::invalid_argument("SpectrumSet: a spectrum is never empty");
  for (const auto& iv : intervals) {
    if (!(iv.lo <= iv.hi))
      throw std::invalid_argument("SpectrumSet: interval with lo > hi");
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      throw std::invalid_argument("SpectrumSet: non-finite endpoint");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) {
              return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
            });
  intervals_.push_back(intervals.front());
  for (std::size_t i = 1; i < intervals.size(); ++i) {
    Interval& last = intervals_.back();
    if (intervals[i].lo - last.hi <= kMergeTol) {
      last.hi = std::max(last.hi, intervals[i].hi);
    } else {
      intervals_.push_back(intervals[i]);
    }
  }
}

double SpectrumSet::distance_to(double x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& iv : intervals_) {
    if (x < iv.lo) {
      best = std::min(best, iv.lo - x);
      break;  // intervals are sorted; later ones are even farther
    }
    if (x <= iv.hi) return 0.0;
    best = std::min(best, x - iv.hi);
  }
  return best;
}

namespace {

// Every point of s lies within tol of t. Since both sets are normalized
// unions of closed intervals, it is enough that each interval of s is
// covered by the union of t's intervals inflated by tol.
bool covered_within(const SpectrumSet& s, const SpectrumSet& t, double tol) {
  for (const auto& iv : s.intervals()) {
    double reached = iv.lo;
    bool started = false;
    for (const auto& jv : t.intervals()) {
      const double lo = jv.lo - tol;
      const double hi = jv.hi + tol;
      if (hi < iv.lo) continue;
      if (lo > (started ? reached : iv.lo)) return false;
      reached = std::max(reached, hi);
      started = true;
      if (reached >= iv.hi) break;
    }
    if (!started || reached < iv.hi) return false;
  }
  return true;
}

}  // namespace

bool SpectrumSet::approx_equals(const SpectrumSet& other, double tol) const {
  return covered_within(*this, other, tol) && covered_within(other, *this, tol);
}

SpectrumSet SpectrumSet::affine(double scale, double shift) const {
  std::vector<Interval> out;
  out.reserve(intervals_.size());
  for (const auto& iv : intervals_) {
    const double a = scale * iv.lo + shift;
    const double b = scale * iv.hi + shift;
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  return SpectrumSet(std::move(out));
}

SpectrumSet minkowski_sum(const SpectrumSet& s, const SpectrumSet& t) {
  std::vector<SpectrumSet::Interval> out;
  out.reserve(s.intervals().size() * t.intervals().size());
  for (const auto& a : s.intervals())
    for (const auto& b : t.intervals()) out.push_back({a.lo + b.lo, a.hi + b.hi});
  return SpectrumSet(std::move(out));
}

SpectrumSet pointwise_product(const SpectrumSet& s, const SpectrumSet& t) {
  std::vector<SpectrumSet::Interval> out;
  out.reserve(s.intervals().size() * t.intervals().size());
  for (const auto& a : s.intervals())
    for (const auto& b : t.intervals()) {
      // xy is bilinear on the box, so its extrema sit at corners.
      const double c0 = a.lo * b.lo;
      const double c1 = a.lo * b.hi;
      const double c2 = a.hi * b.lo;
      const double c3 = a.hi * b.hi;
      out.push_back({std::min({c0, c1, c2, c3}), std::max({c0, c1, c2, c3})});
    }
  return SpectrumSet(std::move(out));
}

SpectrumSet strong_combine(const SpectrumSet& s, const SpectrumSet& t) {
  std::vector<SpectrumSet::Interval> out;
  out.reserve(s.intervals().size() * t.intervals().size());
  auto f = [](double x, double y) { return x + y + x * y; };
  for (const auto& a : s.intervals())
    for (const auto& b : t.intervals()) {
      const double c0 = f(a.lo, b.lo);
      const double c1 = f(a.lo, b.hi);
      const double c2 = f(a.hi, b.lo);
      const double c3 = f(a.hi, b.hi);
      out.push_back({std::min({c0, c1, c2, c3}), std::max({c0, c1, c2, c3})});
    }
  return SpectrumSet(std::move(out));
}

SpectrumSet from_eigen(const EigenSpectrum& e) {
  std::vector<SpectrumSet::Interval> out;
  out.reserve(e.values.size());
  for (double v : e.values) out.push_back({v, v});
  return SpectrumSet(std::move(out));
}

}  // namespace bandspec
