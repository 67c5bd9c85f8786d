#ifndef BANDSPEC_VERIFY_HPP
#define BANDSPEC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bandspec/eigensolver.hpp"
#include "bandspec/expr.hpp"
#include "bandspec/graph.hpp"
#include "bandspec/spectrum_set.hpp"

namespace bandspec {

inline constexpr std::uint64_t kDefaultVertexCap = 4000;
inline constexpr double kDefaultVerifyTol = 1e-8;

/// An eigenvalue of the materialized graph lying outside every predicted
/// band by more than the containment tolerance.
struct ContainmentViolation {
  double eigenvalue;
  double distance;  // to the nearest predicted band
  bool operator==(const ContainmentViolation&) const = default;
};

/// Outcome of checking one finite materialization against the symbolic
/// band prediction.
struct VerificationReport {
  std::string expression;  // canonical printing of the checked expression
  int truncation = 0;
  int vertex_count = 0;
  SpectrumSet predicted = SpectrumSet::point(0.0);
  EigenSpectrum computed;
  std::vector<ContainmentViolation> violations;
  std::vector<int> uncovered_bands;  // indices of bands holding no eigenvalue
  // Covering radius of the computed eigenvalues over the predicted set:
  // max over points x of the predicted bands of the distance from x to the
  // nearest computed eigenvalue. The maximum of that piecewise-linear
  // function sits at a band endpoint or at the midpoint of two consecutive
  // eigenvalues, so it is evaluated exactly from those candidates.
  double max_band_distance = 0.0;

  bool passed() const { return violations.empty(); }
};

/// Vertex count materialize(e, truncation) would produce, saturating at
/// the maximum uint64 on overflow.
std::uint64_t materialized_size(const GraphExpr& e, int truncation);

/// Breadth-first ball of the q-regular tree: complete generations are
/// added until at least min_vertices vertices exist. q >= 3.
FiniteGraph tree_ball(int q, int min_vertices);

/// Finite stand-in for an expression: Line becomes the cycle C_truncation,
/// Lattice(d) the d-fold sum of that cycle (a torus), Tree(q) a
/// breadth-first ball with >= truncation vertices; finite literals pass
/// through; compositions are built edge-for-edge. truncation >= 3.
/// Throws CapExceededError when the result would exceed vertex_cap.
FiniteGraph materialize(const GraphExpr& e, int truncation,
                        std::uint64_t vertex_cap = kDefaultVertexCap);

/// Pure report assembly from a prediction and a computed spectrum; exposed
/// separately so tests can feed synthetic mismatches.
VerificationReport check_spectrum(std::string expression, int truncation,
                                  int vertex_count, SpectrumSet predicted,
                                  EigenSpectrum computed, double tol);

/// Eigensolve the materialization of e and test every distinct eigenvalue
/// for membership in eval_spectrum(e) within tol.
VerificationReport verify_containment(const GraphExpr& e, int truncation,
                                      double tol = kDefaultVerifyTol,
                                      std::uint64_t vertex_cap = kDefaultVertexCap);

/// One containment report per truncation. For Line/Lattice-based
/// expressions max_band_distance shrinks as truncations grow (cycle
/// eigenvalues fill [-2,2]); tree balls are containment-checked only.
std::vector<VerificationReport> verify_coverage(
    const GraphExpr& e, const std::vector<int>& truncations,
    double tol = kDefaultVerifyTol, std::uint64_t vertex_cap = kDefaultVertexCap);

}  // namespace bandspec

#endif  // BANDSPEC_VERIFY_HPP
