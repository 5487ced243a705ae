#pragma once

// JSON documents for check reports, Lagrange scans and the F3 argument.
// Requires nlohmann/json (vendor/json.hpp).

#include <string>
#include <vector>

#include "json.hpp"
#include "smeadow/check.hpp"
#include "smeadow/f3_argument.hpp"
#include "smeadow/finite_field.hpp"

namespace smeadow {

inline constexpr int kJsonSchemaVersion = 1;

inline nlohmann::json to_json(const RenderedValue& v) { return {{"term", v.term}, {"decimal", v.decimal}}; }

inline nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json val = nlohmann::json::object();
    for (const auto& [name, v] : f.valuation) val[name] = to_json(v);
    failures.push_back({{"valuation", val}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}});
  }
  nlohmann::json j = {
      {"schema_version", kJsonSchemaVersion},
      {"equation", r.equation},
      {"model", r.model},
      {"mode", mode_name(r.mode)},
      {"conditional", r.conditional},
      {"trials", r.trials},
      {"satisfied", r.satisfied},
      {"skipped", r.skipped},
      {"failures", failures},
      {"failure_count", r.failure_count},
      {"verdict", r.pass() ? "pass" : "fail"},
  };
  if (!r.counters.empty()) j["counters"] = r.counters;
  return j;
}

inline nlohmann::json to_json(const std::vector<CheckReport>& reports, const std::string& suite) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : reports) items.push_back(to_json(r));
  return {{"schema_version", kJsonSchemaVersion},
          {"suite", suite},
          {"reports", items},
          {"verdict", all_pass(reports) ? "pass" : "fail"}};
}

inline nlohmann::json to_json(const LagrangeScan& s) {
  nlohmann::json sample = nlohmann::json::array();
  for (const auto& [p, w] : s.counterexample_sample) sample.push_back({{"p", p}, {"witness", w}});
  return {{"schema_version", kJsonSchemaVersion},
          {"n", s.n},
          {"limit", s.limit},
          {"holds", s.holds},
          {"counterexample_sample", sample}};
}

inline nlohmann::json to_json(const F3Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.md_and_l1) checks.push_back(to_json(c));
  return {{"schema_version", kJsonSchemaVersion},
          {"squares", r.squares},
          {"squares_are_zero_one", r.squares_are_zero_one},
          {"lagrange1_holds", r.lagrange1_holds},
          {"md_and_l1_pass", r.md_and_l1_pass},
          {"md_and_l1", checks},
          {"finite_value", r.finite_value},
          {"exact_value", r.exact_value.get_str()},
          {"blocks_homomorphism", r.blocks_homomorphism},
          {"verdict", r.pass() ? "pass" : "fail"}};
}

}  // namespace smeadow
