#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "graceful/labeling.hpp"
#include "graceful/probes.hpp"
#include "graceful/search.hpp"
#include "graceful/tree.hpp"

// JSON and DOT renderings of the library types. Certificates follow
// {"tree", "constraints", "status", "witnesses", "nodes_explored", "oracle_checked"}
// with a few extra keys (mode, count, forced_critical).

namespace graceful {

using Json = nlohmann::ordered_json;

inline std::string_view to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::first: return "first";
    case SearchMode::all: return "all";
    case SearchMode::count: return "count";
  }
  return "?";
}

inline SearchMode parse_search_mode(std::string_view s) {
  if (s == "first") return SearchMode::first;
  if (s == "all") return SearchMode::all;
  if (s == "count") return SearchMode::count;
  throw Error("unknown search mode '" + std::string(s) + "'");
}

inline Json to_json(const Labeling& labeling) { return Json{{"labels", labeling.values()}}; }

/// Accepts either a bare array or {"labels": [...]}.
inline Labeling labeling_from_json(const nlohmann::json& j) {
  try {
    const auto& arr = j.is_object() ? j.at("labels") : j;
    return Labeling(arr.get<std::vector<Label>>());
  } catch (const nlohmann::json::exception& e) {
    throw LabelingError(std::string("bad labeling JSON: ") + e.what());
  }
}

inline Labeling parse_labeling(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw LabelingError(std::string("bad labeling JSON: ") + e.what());
  }
  return labeling_from_json(j);
}

inline Json to_json(const Tree& tree) {
  Json edges = Json::array();
  for (const Edge& e : tree.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", tree.size()}, {"edges", std::move(edges)}};
}

/// Weights and classification of a full labeling.
inline Json weight_report(const Tree& tree, const Labeling& labeling) {
  const auto weights = edge_weights(tree, labeling);
  const auto bip = bipartite_critical(tree, labeling);
  const bool graceful = is_graceful(tree, labeling);
  Json j{{"labels", labeling.values()}, {"weights", weights}, {"graceful", graceful},
         {"bipartite", bip.is_bipartite_labeling}};
  j["critical"] = bip.critical ? Json(*bip.critical) : Json(nullptr);
  j["low_side"] = bip.low_side ? Json(*bip.low_side) : Json(nullptr);
  j["alpha"] = graceful && bip.critical ? Json(*bip.critical) : Json(nullptr);
  return j;
}

inline Json to_json(const ConstraintSet& cs) {
  Json fixed = Json::object();
  for (auto [v, l] : cs.fixed) fixed[std::to_string(v)] = l;
  auto opt = [](const std::optional<Vertex>& v) { return v ? Json(*v) : Json(nullptr); };
  return Json{{"fixed", std::move(fixed)},
              {"require_alpha", cs.alpha()},
              {"critical_on", opt(cs.critical_on)},
              {"max_on", opt(cs.max_on)},
              {"zero_on", opt(cs.zero_on)}};
}

inline Json to_json(const SearchCertificate& cert) {
  Json witnesses = Json::array();
  for (const auto& w : cert.witnesses) witnesses.push_back(w.values());
  Json j{{"tree", cert.tree_code},
         {"constraints", to_json(cert.constraints)},
         {"mode", to_string(cert.mode)},
         {"status", cert.sat() ? "SAT" : "UNSAT"},
         {"witnesses", std::move(witnesses)}};
  if (cert.mode != SearchMode::first) j["count"] = cert.solution_count;
  j["forced_critical"] = cert.forced_critical ? Json(*cert.forced_critical) : Json(nullptr);
  j["nodes_explored"] = cert.nodes_explored;
  j["oracle_checked"] = cert.oracle_checked;
  return j;
}

inline Json to_json(const ProbeVerdict& verdict) {
  Json cases = Json::array();
  for (const auto& c : verdict.cases)
    cases.push_back({{"name", c.name}, {"status", c.sat() ? "SAT" : "UNSAT"}, {"certificate", to_json(c.certificate)}});
  return Json{{"probe", to_string(verdict.kind)},
              {"code", verdict.tree_code},
              {"applicable", verdict.applicable},
              {"failure", verdict.failure()},
              {"verdicts", std::move(cases)}};
}

inline Json to_json(const HuntReport& report) {
  Json entries = Json::array();
  Json failures = Json::array();
  for (const auto& e : report.entries) {
    Json entry = to_json(e.verdict);
    entry["n"] = e.n;
    entry["edges"] = to_edge_list(e.tree, true);
    if (e.verdict.failure()) failures.push_back(entry);
    entries.push_back(std::move(entry));
  }
  return Json{{"probe", to_string(report.kind)},
              {"n_max", report.n_max},
              {"trees_examined", report.trees_examined},
              {"applicable", report.entries.size()},
              {"failures", std::move(failures)},
              {"entries", std::move(entries)}};
}

/// Graphviz rendering; with a labeling, nodes read "vertex:label".
inline std::string export_dot(const Tree& tree, const Labeling* labeling = nullptr) {
  if (labeling) validate_labeling(tree, *labeling);
  std::ostringstream out;
  out << "graph tree {\n";
  for (Vertex v = 0; v < tree.size(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (labeling) out << ':' << (*labeling)[v];
    out << "\"];\n";
  }
  for (const Edge& e : tree.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace graceful
