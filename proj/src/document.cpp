#include "bandspec/document.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace bandspec {

namespace {

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace

VerificationSummary VerificationSummary::from_report(const VerificationReport& r) {
  VerificationSummary s;
  s.truncation = r.truncation;
  s.vertices = r.vertex_count;
  s.violations = r.violations;
  s.uncovered_bands = r.uncovered_bands;
  s.max_band_distance = r.max_band_distance;
  s.pass = r.passed();
  return s;
}

std::string to_json(const SpectrumDocument& doc) {
  nlohmann::json j;
  j["expr"] = doc.expr;
  j["kind"] = to_string(doc.kind);
  if (doc.degree)
    j["degree"] = *doc.degree;
  else
    j["degree"] = nullptr;
  j["band_count"] = doc.bands.size();
  nlohmann::json bands = nlohmann::json::array();
  for (const auto& b : doc.bands) bands.push_back({{"lo", b.lo}, {"hi", b.hi}});
  j["bands"] = std::move(bands);
  if (doc.verification) {
    const VerificationSummary& v = *doc.verification;
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& viol : v.violations)
      violations.push_back({{"eigenvalue", viol.eigenvalue}, {"distance", viol.distance}});
    j["verification"] = {{"truncation", v.truncation},
                         {"vertices", v.vertices},
                         {"violations", std::move(violations)},
                         {"uncovered_bands", v.uncovered_bands},
                         {"max_band_distance", v.max_band_distance},
                         {"pass", v.pass}};
  } else {
    j["verification"] = nullptr;
  }
  return j.dump(2) + "\n";
}

SpectrumDocument document_from_json(const std::string& text) {
  try {
    const nlohmann::json j = nlohmann::json::parse(text);
    SpectrumDocument doc;
    doc.expr = j.at("expr").get<std::string>();
    const auto kind = operator_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw std::runtime_error("unknown operator kind");
    doc.kind = *kind;
    if (!j.at("degree").is_null()) doc.degree = j.at("degree").get<std::int64_t>();
    for (const auto& b : j.at("bands"))
      doc.bands.push_back({b.at("lo").get<double>(), b.at("hi").get<double>()});
    if (j.at("band_count").get<std::size_t>() != doc.bands.size())
      throw std::runtime_error("band_count disagrees with bands");
    if (!j.at("verification").is_null()) {
      const nlohmann::json& jv = j.at("verification");
      VerificationSummary v;
      v.truncation = jv.at("truncation").get<int>();
      v.vertices = jv.at("vertices").get<int>();
      for (const auto& viol : jv.at("violations"))
        v.violations.push_back(
            {viol.at("eigenvalue").get<double>(), viol.at("distance").get<double>()});
      v.uncovered_bands = jv.at("uncovered_bands").get<std::vector<int>>();
      v.max_band_distance = jv.at("max_band_distance").get<double>();
      v.pass = jv.at("pass").get<bool>();
      doc.verification = std::move(v);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("bad spectrum document: ") + e.what());
  }
}

std::string to_text(const SpectrumDocument& doc) {
  std::string out;
  for (const auto& b : doc.bands)
    out += "[" + fmt12(b.lo) + ", " + fmt12(b.hi) + "]\n";
  out += "bands: " + std::to_string(doc.bands.size()) + "  degree: " +
         (doc.degree ? std::to_string(*doc.degree) : std::string("unknown")) + "\n";
  if (doc.verification) {
    const VerificationSummary& v = *doc.verification;
    out += "truncation: " + std::to_string(v.truncation) +
           "  vertices: " + std::to_string(v.vertices) + "\n";
    out += "violations: " + std::to_string(v.violations.size()) + "\n";
    for (const auto& viol : v.violations)
      out += "  eigenvalue " + fmt12(viol.eigenvalue) + " misses the bands by " +
             fmt12(viol.distance) + "\n";
    if (!v.uncovered_bands.empty()) {
      out += "uncovered bands:";
      for (int i : v.uncovered_bands) out += " " + std::to_string(i);
      out += "\n";
    }
    out += "max band distance: " + fmt12(v.max_band_distance) + "\n";
    out += v.pass ? "PASS\n" : "FAIL\n";
  }
  return out;
}

}  // namespace bandspec
