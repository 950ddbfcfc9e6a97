#pragma once

// JSON encoding of classifications, witnesses and check reports. Key order
// is fixed so documents are byte-stable.

#include <string>
#include <vector>

#include "json.hpp"

#include "idealis/classify.hpp"
#include "idealis/oracle.hpp"
#include "idealis/parse.hpp"
#include "idealis/theorems.hpp"

namespace idealis {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

inline Json document(const std::string& command, Json payload) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["payload"] = std::move(payload);
  return doc;
}

inline Json to_json(const Provenance& p) {
  Json j;
  j["kind"] = std::string(provenance_kind_name(p.kind));
  if (!p.rule.empty()) j["rule"] = p.rule;
  return j;
}

inline Json verdicts_json(const Classification& c) {
  Json j = Json::object();
  for (Predicate p : kAllPredicates) j[std::string(field_name(p))] = c[p];
  return j;
}

inline Json provenance_json(const Classification& c) {
  Json j = Json::object();
  for (Predicate p : kAllPredicates) j[std::string(field_name(p))] = to_json(c.provenance[predicate_index(p)]);
  return j;
}

/// "structural", "structural+oracle", ... in fixed kind order.
inline std::string provenance_summary(const Classification& c) {
  std::string out;
  for (ProvenanceKind k : {ProvenanceKind::Structural, ProvenanceKind::Oracle, ProvenanceKind::TransferOracle}) {
    const bool used = std::any_of(c.provenance.begin(), c.provenance.end(), [&](const Provenance& p) { return p.kind == k; });
    if (!used) continue;
    if (!out.empty()) out += "+";
    out += provenance_kind_name(k);
  }
  return out;
}

inline Json to_json(const Classification& c) {
  Json j;
  j["predicates"] = verdicts_json(c);
  j["provenance"] = provenance_json(c);
  return j;
}

inline Json to_json(const RingSpec& ring, const Witness& w) {
  Json j;
  j["condition"] = w.condition;
  j["kind"] = std::string(witness_kind_name(w.kind));
  Json elems = Json::array();
  for (const auto& e : w.elements) elems.push_back(format_element(ring, e));
  j["elements"] = std::move(elems);
  Json ideals = Json::array();
  for (const auto& i : w.ideals) ideals.push_back(format_ideal(i));
  j["ideals"] = std::move(ideals);
  j["failed_disjuncts"] = w.failed_disjuncts;
  if (w.kind == WitnessKind::Exhausted) j["parameter"] = w.parameter;
  return j;
}

inline Json to_json(const CheckReport& r) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["status"] = std::string(check_status_name(r.status));
  j["cases"] = r.cases;
  Json rings = Json::array();
  for (const auto& ring : r.rings_tested) rings.push_back(format_ring(ring));
  j["rings_tested"] = std::move(rings);
  if (r.counterexample) {
    const auto& ce = *r.counterexample;
    Json c;
    c["ring"] = format_ring(ce.ring);
    Json ideals = Json::array();
    for (const auto& i : ce.ideals) ideals.push_back(format_ideal(i));
    c["ideals"] = std::move(ideals);
    c["detail"] = ce.detail;
    c["witness"] = ce.witness ? to_json(ce.ring, *ce.witness) : Json(nullptr);
    j["counterexample"] = std::move(c);
  } else {
    j["counterexample"] = nullptr;
  }
  if (r.status == CheckStatus::Error) j["error"] = r.error;
  return j;
}

inline Json to_json(const std::vector<CheckReport>& reports) {
  Json j = Json::array();
  for (const auto& r : reports) j.push_back(to_json(r));
  return j;
}

}  // namespace idealis
