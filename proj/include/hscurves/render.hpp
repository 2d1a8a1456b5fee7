#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "hscurves/census.hpp"

namespace hscurves::render {

using census::FamilyCandidate;
using census::GenusReport;
using census::Verdict;
using census::VerdictKind;
using nlohmann::json;

inline json to_json(const FamilyCandidate& c) {
  json j;
  j["label"] = c.label;
  j["construction"] = families::to_string(c.construction);
  j["level"] = c.level == families::DimLevel::Embedded ? "embedded" : "series";
  j["dim"] = c.dim;
  j["bound"] = c.bound;
  j["excess"] = c.excess;
  j["status"] = families::to_string(c.status);
  if (!c.exclusion_reason.empty()) j["exclusion_reason"] = c.exclusion_reason;
  if (c.gonality_upper) j["gonality_upper"] = *c.gonality_upper;
  if (c.moduli_image_dim) j["moduli_image_dim"] = *c.moduli_image_dim;
  if (c.moduli_codim) j["moduli_codim"] = *c.moduli_codim;
  if (c.cited_dim) j["cited_dim"] = *c.cited_dim;
  j["justification"] = c.justification;
  j["notes"] = c.notes;
  return j;
}

inline json to_json(const GenusReport& r) {
  json j;
  j["triple"] = {{"d", r.triple.d}, {"g", r.triple.g}, {"r", r.triple.r}};
  j["bounds"] = {{"rho", r.bounds.rho},   {"lambda", r.bounds.lambda},
                 {"chi", r.bounds.chi},   {"pi", r.bounds.pi},
                 {"pi1", r.bounds.pi1},   {"regime", bounds::to_string(r.bounds.regime)}};
  j["candidates"] = json::array();
  for (const auto& c : r.candidates) j["candidates"].push_back(to_json(c));
  j["verdict"] = {{"kind", census::to_string(r.verdict.kind)},
                  {"justification", r.verdict.justification}};
  if (r.verdict.kind == VerdictKind::Reducible)
    j["verdict"]["count"] = r.verdict.component_count;
  j["notes"] = r.notes;
  return j;
}

inline json census_to_json(const std::vector<GenusReport>& reports) {
  json j;
  j["schema"] = "census-v1";
  if (!reports.empty()) {
    j["d"] = reports.front().triple.d;
    j["r"] = reports.front().triple.r;
  }
  j["reports"] = json::array();
  for (const auto& r : reports) j["reports"].push_back(to_json(r));
  return j;
}

inline std::string render_json(const std::vector<GenusReport>& reports) {
  return census_to_json(reports).dump(2) + "\n";
}

// Parsing (exercised by the round-trip test and by downstream consumers).

inline FamilyCandidate candidate_from_json(const json& j) {
  FamilyCandidate c;
  c.label = j.at("label").get<std::string>();
  const std::string con = j.at("construction").get<std::string>();
  using families::Construction;
  for (auto k : {Construction::OnScroll, Construction::OnCone, Construction::OnVeronese,
                 Construction::OnEllipticCone, Construction::OnDelPezzo5,
                 Construction::OnBlownPlaneSurface, Construction::GonalResidual,
                 Construction::HurwitzResidual, Construction::SeveriPlaneModel,
                 Construction::CompleteIntersection, Construction::QuadricModel,
                 Construction::Principal})
    if (con == families::to_string(k)) c.construction = k;
  c.level = j.at("level").get<std::string>() == "embedded" ? families::DimLevel::Embedded
                                                           : families::DimLevel::SeriesOnly;
  c.dim = j.at("dim").get<Int>();
  c.bound = j.at("bound").get<Int>();
  c.excess = j.at("excess").get<Int>();
  const std::string st = j.at("status").get<std::string>();
  using families::Status;
  for (auto s : {Status::ComponentCandidate, Status::StrictlyInsideBoundary, Status::Excluded})
    if (st == families::to_string(s)) c.status = s;
  if (j.contains("exclusion_reason"))
    c.exclusion_reason = j.at("exclusion_reason").get<std::string>();
  if (j.contains("gonality_upper")) c.gonality_upper = j.at("gonality_upper").get<Int>();
  if (j.contains("moduli_image_dim"))
    c.moduli_image_dim = j.at("moduli_image_dim").get<Int>();
  if (j.contains("moduli_codim")) c.moduli_codim = j.at("moduli_codim").get<Int>();
  if (j.contains("cited_dim")) c.cited_dim = j.at("cited_dim").get<Int>();
  c.justification = j.at("justification").get<std::string>();
  c.notes = j.at("notes").get<std::vector<std::string>>();
  return c;
}

inline GenusReport report_from_json(const json& j) {
  GenusReport r;
  r.triple = {j.at("triple").at("d").get<Int>(), j.at("triple").at("g").get<Int>(),
              j.at("triple").at("r").get<Int>()};
  r.bounds = bounds::bounds_record(r.triple);
  for (const auto& cj : j.at("candidates")) r.candidates.push_back(candidate_from_json(cj));
  const std::string vk = j.at("verdict").at("kind").get<std::string>();
  for (auto k : {VerdictKind::Empty, VerdictKind::Irreducible, VerdictKind::Reducible,
                 VerdictKind::Open})
    if (vk == census::to_string(k)) r.verdict.kind = k;
  if (j.at("verdict").contains("count"))
    r.verdict.component_count = j.at("verdict").at("count").get<Int>();
  r.verdict.justification = j.at("verdict").at("justification").get<std::string>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

inline std::vector<GenusReport> census_from_json(const std::string& text) {
  const json j = json::parse(text);
  require(j.at("schema").get<std::string>() == "census-v1",
          "census_from_json: unknown schema");
  std::vector<GenusReport> out;
  for (const auto& rj : j.at("reports")) out.push_back(report_from_json(rj));
  return out;
}

// Markdown / CSV.  Both are row-per-candidate mirrors of the same numbers.

namespace detail {

inline std::string opt_str(const std::optional<Int>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

inline std::string dim_cell(const FamilyCandidate& c) {
  std::string s = std::to_string(c.dim);
  if (c.cited_dim) s += " (cited " + std::to_string(*c.cited_dim) + ")";
  return s;
}

inline std::string status_cell(const FamilyCandidate& c) {
  std::string s = families::to_string(c.status);
  if (!c.exclusion_reason.empty()) s += "(" + c.exclusion_reason + ")";
  return s;
}

inline std::string verdict_cell(const Verdict& v) {
  std::string s = census::to_string(v.kind);
  if (v.kind == VerdictKind::Reducible)
    s += "(" + std::to_string(v.component_count) + ")";
  return s;
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  return out + "\"";
}

/// Quote only when needed; keeps plain numbers plain.
inline std::string csv_cell(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find(' ') == std::string::npos &&
      s.find('"') == std::string::npos)
    return s;
  return csv_quote(s);
}

}  // namespace detail

inline std::string render_markdown(const std::vector<GenusReport>& reports) {
  std::ostringstream os;
  if (!reports.empty())
    os << "# Component census: degree " << reports.front().triple.d << " curves in P^"
       << reports.front().triple.r << "\n\n";
  os << "| g | regime | family | dim | bound | excess | status | gonality<= | verdict | "
        "justification |\n";
  os << "|---|--------|--------|-----|-------|--------|--------|-----------|---------|"
        "---------------|\n";
  for (const auto& r : reports) {
    const std::string verdict = detail::verdict_cell(r.verdict);
    if (r.candidates.empty())
      os << "| " << r.triple.g << " | " << bounds::to_string(r.bounds.regime)
         << " | (none) | - | " << r.bounds.chi << " | - | - | - | " << verdict << " | "
         << r.verdict.justification << " |\n";
    for (const auto& c : r.candidates)
      os << "| " << r.triple.g << " | " << bounds::to_string(r.bounds.regime) << " | "
         << c.label << " | " << detail::dim_cell(c) << " | " << c.bound << " | "
         << c.excess << " | " << detail::status_cell(c) << " | "
         << detail::opt_str(c.gonality_upper) << " | " << verdict << " | "
         << r.verdict.justification << " |\n";
  }
  for (const auto& r : reports) {
    std::vector<std::string> lines = r.notes;
    for (const auto& c : r.candidates)
      for (const auto& n : c.notes) lines.push_back(c.label + ": " + n);
    if (lines.empty()) continue;
    os << "\n## g = " << r.triple.g << " notes\n";
    for (const auto& n : lines) os << "- " << n << "\n";
  }
  return os.str();
}

inline std::string render_csv(const std::vector<GenusReport>& reports) {
  std::ostringstream os;
  os << "g,regime,family,dim,bound,excess,status,gonality_upper,verdict,justification\n";
  for (const auto& r : reports) {
    const std::string verdict = detail::verdict_cell(r.verdict);
    if (r.candidates.empty())
      os << r.triple.g << "," << bounds::to_string(r.bounds.regime) << ",(none),-,"
         << r.bounds.chi << ",-,-,-," << verdict << ","
         << detail::csv_quote(r.verdict.justification) << "\n";
    for (const auto& c : r.candidates)
      os << r.triple.g << "," << bounds::to_string(r.bounds.regime) << ","
         << detail::csv_quote(c.label) << "," << detail::csv_cell(detail::dim_cell(c))
         << "," << c.bound << "," << c.excess << "," << detail::status_cell(c) << ","
         << detail::opt_str(c.gonality_upper) << "," << verdict << ","
         << detail::csv_quote(r.verdict.justification) << "\n";
  }
  return os.str();
}

inline json bounds_to_json(const bounds::CurveTriple& t) {
  const auto rec = bounds::bounds_record(t);
  json j;
  j["triple"] = {{"d", t.d}, {"g", t.g}, {"r", t.r}};
  j["rho"] = rec.rho;
  j["lambda"] = rec.lambda;
  j["chi"] = rec.chi;
  j["pi"] = rec.pi;
  j["pi1"] = rec.pi1;
  j["pi1_formula_regime"] =
      bounds::castelnuovo_pi1_regime(t.d, t.r) == bounds::Pi1Regime::Standard
          ? "standard"
          : "minimal-degree-fallback";
  j["regime"] = bounds::to_string(rec.regime);
  return j;
}

}  // namespace hscurves::render
