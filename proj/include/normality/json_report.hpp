#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "normality/formulas.hpp"
#include "normality/invariants.hpp"
#include "normality/verify.hpp"

// JSON views of profiles, formula results and reports. nlohmann::json keeps
// object keys sorted, so the serialized form is deterministic.

namespace normality {

inline constexpr int kJsonSchema = 1;

inline nlohmann::json to_json(const InvariantProfile& p) {
  return {{"ecc", p.ecc},
          {"norm", p.norm},
          {"lambda", p.lambda},
          {"periphery", p.periphery},
          {"center", p.center},
          {"normality_center", p.normality_center},
          {"diameter", p.diameter},
          {"radius", p.radius},
          {"ecc_sum", p.ecc_sum},
          {"norm_sum", p.norm_sum},
          {"lambda_sum", p.lambda_sum}};
}

inline nlohmann::json to_json(const FormulaResult& f) {
  nlohmann::json j{{"branch", f.branch}, {"applies", f.applies()}};
  j["value"] = f.value ? nlohmann::json(*f.value) : nlohmann::json(nullptr);
  return j;
}

namespace detail {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json codes_json(const std::vector<CanonicalCode>& codes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : codes) arr.push_back(c.str());
  return arr;
}

}  // namespace detail

inline nlohmann::json to_json(const ExtremalReport& r) {
  nlohmann::json j;
  if (!r.theorem.empty()) j["theorem"] = r.theorem;
  j["constraints"] = {{"n", r.n},
                      {"diameter", detail::optional_json(r.diameter)},
                      {"peripheral_count", detail::optional_json(r.peripheral_count)}};
  j["trees_scanned"] = r.trees_scanned;
  j["discrepancy"] = r.discrepancy;
  j["detail"] = r.detail;
  j["notes"] = r.notes;

  if (r.property) {
    j["kind"] = "property";
    j["property"] = {{"name", r.property->property},
                     {"trees_checked", r.property->trees_checked},
                     {"failures", detail::codes_json(r.property->failures)}};
    return j;
  }

  j["kind"] = "scan";
  j["objective"] = to_string(r.objective);
  j["direction"] = to_string(r.direction);
  j["vacuous"] = r.vacuous;
  j["optimum"] = detail::optional_json(r.optimum);
  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : r.witnesses) witnesses.push_back({{"code", w.code.str()}, {"edge_list", w.edge_list}});
  j["witnesses"] = std::move(witnesses);
  if (r.prediction) {
    const auto& p = *r.prediction;
    nlohmann::json pj{{"value", detail::optional_json(p.value)},
                      {"source", p.source},
                      {"relation", to_string(p.relation)},
                      {"witnesses", detail::codes_json(p.witnesses)}};
    if (p.diameter_range)
      pj["diameter_range"] = {p.diameter_range->lo, p.diameter_range->hi};
    j["prediction"] = std::move(pj);
  } else {
    j["prediction"] = nullptr;
  }
  return j;
}

inline nlohmann::json to_json(const AnomalyRecord& a) {
  return {{"base_code", a.base_code.str()},
          {"base_edge_list", serialize_edge_list(a.base)},
          {"added_edge", {a.added.u, a.added.v}},
          {"norm_sum_before", a.norm_sum_before},
          {"norm_sum_after", a.norm_sum_after}};
}

}  // namespace normality
