#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wopkit/errors.hpp"
#include "wopkit/inequality.hpp"
#include "wopkit/verify.hpp"
#include "wopkit/weak_order.hpp"

namespace wopkit {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kRecordSchema = "wop-ineq/1";
inline constexpr const char* kReportSchema = "wop-report/1";
inline constexpr const char* kScanSchema = "wop-scan/1";

using Json = nlohmann::ordered_json;

inline Json to_record_json(const Inequality& q) {
  Json j;
  j["schema"] = kRecordSchema;
  j["class"] = to_string(q.tag);
  j["n"] = q.n;
  j["fixed"] = q.fixed;
  j["sense"] = q.geq ? ">=" : "<=";
  j["rhs"] = q.rhs;
  Json coeffs = Json::array();
  for (const auto& [pair, c] : q.coeffs) coeffs.push_back({pair.first, pair.second, c});
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline std::string to_record_line(const Inequality& q) { return to_record_json(q).dump(); }

inline Inequality parse_record_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || j.value("schema", "") != kRecordSchema)
      throw InvariantError("record: missing or unsupported schema");
    Inequality q;
    q.tag = ineq_class_from_string(j.at("class").get<std::string>());
    q.n = j.at("n").get<int>();
    if (q.n < 2 || q.n > kMaxAlternatives) throw InvariantError("record: n out of range");
    for (const auto& f : j.at("fixed")) {
      const int v = f.get<int>();
      if (v < 1 || v > q.n) throw InvariantError("record: fixed index out of range");
      q.fixed.push_back(v);
    }
    const std::string sense = j.at("sense").get<std::string>();
    if (sense != "<=" && sense != ">=") throw InvariantError("record: sense must be <= or >=");
    q.geq = sense == ">=";
    q.rhs = j.at("rhs").get<int>();
    for (const auto& triple : j.at("coeffs")) {
      if (!triple.is_array() || triple.size() != 3)
        throw InvariantError("record: coeffs entries must be [i, j, c]");
      const int a = triple[0].get<int>();
      const int b = triple[1].get<int>();
      const int c = triple[2].get<int>();
      pair_index(a, b, q.n);
      if (c == 0) throw InvariantError("record: zero coefficient");
      if (q.coeffs.count({a, b})) throw InvariantError("record: duplicate coefficient");
      q.coeffs[{a, b}] = c;
    }
    return q;
  } catch (const nlohmann::json::exception& e) {
    throw InvariantError(std::string("record: ") + e.what());
  } catch (const ParameterError& e) {
    throw InvariantError(std::string("record: ") + e.what());
  }
}

inline Inequality parse_record(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvariantError(std::string("record: invalid JSON: ") + e.what());
  }
  return parse_record_json(j);
}

// One-line text form in the style of classic polyhedral tools:
// "+x12 +x21 -x34 <= 1".
inline std::string to_porta_line(const Inequality& q) {
  std::string s;
  for (const auto& [pair, c] : q.coeffs) {
    if (!s.empty()) s += ' ';
    s += c < 0 ? '-' : '+';
    const int mag = c < 0 ? -c : c;
    if (mag != 1) s += std::to_string(mag);
    s += 'x' + std::to_string(pair.first) + std::to_string(pair.second);
  }
  if (s.empty()) s = "0";
  s += q.geq ? " >= " : " <= ";
  s += std::to_string(q.rhs);
  return s;
}

inline Json to_report_json(const FacetReport& rep, bool with_census) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = kToolVersion;
  j["class"] = to_string(rep.tag);
  j["n"] = rep.n;
  j["fixed"] = rep.fixed;
  j["sense"] = rep.geq ? ">=" : "<=";
  j["rhs"] = rep.rhs;
  j["enumeration_size"] = rep.enumeration_size;
  j["valid"] = rep.valid;
  j["max_lhs"] = rep.max_lhs;
  j["tight_count"] = rep.tight_count;
  j["affine_rank"] = rep.affine_rank;
  j["is_facet"] = rep.is_facet;
  if (with_census) {
    Json census = Json::object();
    for (const auto& [label, count] : rep.structure_census) census[label] = count;
    j["structures"] = std::move(census);
    j["unclassified"] = rep.unclassified;
  }
  return j;
}

}  // namespace wopkit
