#ifndef BANDSPEC_SPECTRUM_SET_HPP
#define BANDSPEC_SPECTRUM_SET_HPP

#include <vector>

#include "bandspec/eigensolver.hpp"

namespace bandspec {

/// A finite union of disjoint closed real intervals, the value a band
/// spectrum takes. Atoms (isolated spectral points) are zero-length
/// intervals. Always normalized: intervals sorted by lower endpoint and
/// merged whenever the gap between neighbours is <= kMergeTol. Never empty.
class SpectrumSet {
 public:
  struct Interval {
    double lo;
    double hi;
    bool operator==(const Interval&) const = default;
  };

  /// Gap at or below which adjacent intervals fuse during normalization.
  /// Eliminates floating-point seams without hiding genuine band gaps.
  static constexpr double kMergeTol = 1e-12;

  explicit SpectrumSet(std::vector<Interval> intervals);
  static SpectrumSet point(double x) { return SpectrumSet({{x, x}}); }
  static SpectrumSet interval(double lo, double hi) { return SpectrumSet({{lo, hi}}); }

  const std::vector<Interval>& intervals() const { return intervals_; }
  int band_count() const { return static_cast<int>(intervals_.size()); }
  double min() const { return intervals_.front().lo; }
  double max() const { return intervals_.back().hi; }

  /// Distance from x to the set (0 when inside a band).
  double distance_to(double x) const;
  bool contains(double x, double tol) const { return distance_to(x) <= tol; }

  /// Symmetric-difference emptiness up to tol: every point of each set is
  /// within tol of the other.
  bool approx_equals(const SpectrumSet& other, double tol) const;

  /// {scale*x + shift : x in this}.
  SpectrumSet affine(double scale, double shift) const;

  bool operator==(const SpectrumSet&) const = default;

 private:
  std::vector<Interval> intervals_;
};

/// {x + y : x in s, y in t}: the spectrum of A (x) id + id (x) B.
SpectrumSet minkowski_sum(const SpectrumSet& s, const SpectrumSet& t);

/// {x * y : x in s, y in t}: the spectrum of A (x) B.
SpectrumSet pointwise_product(const SpectrumSet& s, const SpectrumSet& t);

/// {x + y + x*y : x in s, y in t}: the strong-product rule. Equivalently
/// 1 + z = (1 + x)(1 + y).
SpectrumSet strong_combine(const SpectrumSet& s, const SpectrumSet& t);

/// One atom per distinct eigenvalue; multiplicities drop (spectra are sets).
SpectrumSet from_eigen(const EigenSpectrum& e);

}  // namespace bandspec

#endif  // BANDSPEC_SPECTRUM_SET_HPP
