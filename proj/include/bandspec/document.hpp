#ifndef BANDSPEC_DOCUMENT_HPP
#define BANDSPEC_DOCUMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bandspec/expr.hpp"
#include "bandspec/spectrum_set.hpp"
#include "bandspec/verify.hpp"

namespace bandspec {

/// The serializable core of a VerificationReport: what the JSON schema's
/// "verification" object carries.
struct VerificationSummary {
  int truncation = 0;
  int vertices = 0;
  std::vector<ContainmentViolation> violations;
  std::vector<int> uncovered_bands;
  double max_band_distance = 0.0;
  bool pass = true;

  bool operator==(const VerificationSummary&) const = default;
  static VerificationSummary from_report(const VerificationReport& r);
};

/// One CLI result: an expression, the operator kind it was evaluated under,
/// its band spectrum, and (for verification runs) the report summary.
struct SpectrumDocument {
  std::string expr;
  OperatorKind kind = OperatorKind::Adjacency;
  std::optional<std::int64_t> degree;
  std::vector<SpectrumSet::Interval> bands;
  std::optional<VerificationSummary> verification;

  bool operator==(const SpectrumDocument&) const = default;
};

/// Schema (keys are the contract):
/// {"expr": str, "kind": str, "degree": int|null, "band_count": int,
///  "bands": [{"lo": float, "hi": float}], "verification": {...}|null}
/// where verification holds {"truncation": int, "vertices": int,
///  "violations": [{"eigenvalue": float, "distance": float}],
///  "uncovered_bands": [int], "max_band_distance": float, "pass": bool}.
std::string to_json(const SpectrumDocument& doc);

/// Inverse of to_json; throws std::runtime_error on malformed input.
SpectrumDocument document_from_json(const std::string& text);

/// Text rendering: one band per line as `[lo, hi]` at 12 significant
/// digits, then `bands: N  degree: k`, then the verification block if any.
std::string to_text(const SpectrumDocument& doc);

}  // namespace bandspec

#endif  // BANDSPEC_DOCUMENT_HPP
