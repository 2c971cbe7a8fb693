#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graceful/error.hpp"
#include "graceful/families.hpp"
#include "graceful/fixtures.hpp"
#include "graceful/profile.hpp"
#include "graceful/search.hpp"

namespace graceful {

enum class ProbeKind { q1, q2, q3, zero };

inline std::string_view to_string(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::q1: return "q1";
    case ProbeKind::q2: return "q2";
    case ProbeKind::q3: return "q3";
    case ProbeKind::zero: return "zero";
  }
  return "?";
}

inline ProbeKind parse_probe_kind(std::string_view id) {
  if (id == "q1") return ProbeKind::q1;
  if (id == "q2") return ProbeKind::q2;
  if (id == "q3") return ProbeKind::q3;
  if (id == "zero") return ProbeKind::zero;
  throw Error("unknown probe '" + std::string(id) + "' (expected q1, q2, q3 or zero)");
}

/// One constrained search run by a probe.
struct ProbeCase {
  std::string name;  // e.g. "critical=3,max=4"
  SearchCertificate certificate;

  bool sat() const noexcept { return certificate.sat(); }
};

struct ProbeVerdict {
  ProbeKind kind = ProbeKind::q1;
  std::string tree_code;
  bool applicable = false;
  std::vector<ProbeCase> cases;

  bool any_sat() const {
    return std::any_of(cases.begin(), cases.end(), [](const ProbeCase& c) { return c.sat(); });
  }
  /// Applicable and every case UNSAT: a negative answer on this tree.
  bool failure() const { return applicable && !cases.empty() && !any_sat(); }
};

namespace detail {

inline ProbeVerdict start_verdict(ProbeKind kind, const Tree& tree) {
  ProbeVerdict v;
  v.kind = kind;
  v.tree_code = canonical_code(tree);
  return v;
}

inline std::string assignment_name(Vertex critical_on, Vertex max_on) {
  return "critical=" + std::to_string(critical_on) + ",max=" + std::to_string(max_on);
}

}  // namespace detail

/// Two centers, diameter at most 5, lobster.
inline bool q1_applicable(const TreeProfile& prof) {
  return prof.centers.size() == 2 && prof.diameter <= 5 && prof.is_lobster();
}

/// Diameter 4 with a center of even degree.
inline bool q2_applicable(const Tree& tree, const TreeProfile& prof) {
  return prof.diameter == 4 && prof.centers.size() == 1 && tree.degree(prof.centers.front()) % 2 == 0;
}

/// Single center, lobster, diameter 4 (at diameter 2 every almost-central vertex is a leaf).
inline bool q3_applicable(const TreeProfile& prof) {
  return prof.centers.size() == 1 && prof.is_lobster() && prof.diameter >= 3 && prof.diameter <= 5;
}

/// Both ways of putting {critical number, n-1} on the two centers.
inline ProbeVerdict probe_q1(const Tree& tree, const SearchOptions& options = {}) {
  auto verdict = detail::start_verdict(ProbeKind::q1, tree);
  const auto prof = profile(tree);
  verdict.applicable = q1_applicable(prof);
  if (!verdict.applicable) return verdict;
  const Vertex a = prof.centers[0];
  const Vertex b = prof.centers[1];
  for (auto [crit, max] : {std::pair{a, b}, std::pair{b, a}})
    verdict.cases.push_back({detail::assignment_name(crit, max), exists_alpha_with(tree, crit, max, options)});
  return verdict;
}

/// Graceful labeling with the center labeled n-1.
inline ProbeVerdict probe_q2(const Tree& tree, const SearchOptions& options = {}) {
  auto verdict = detail::start_verdict(ProbeKind::q2, tree);
  const auto prof = profile(tree);
  verdict.applicable = q2_applicable(tree, prof);
  if (!verdict.applicable) return verdict;
  ConstraintSet cs;
  cs.max_on = prof.centers.front();
  verdict.cases.push_back({"max=" + std::to_string(*cs.max_on), search_graceful(tree, cs, options)});
  return verdict;
}

/// Center carries the critical number, an almost-central vertex carries n-1.
inline ProbeVerdict probe_q3(const Tree& tree, const SearchOptions& options = {}) {
  auto verdict = detail::start_verdict(ProbeKind::q3, tree);
  const auto prof = profile(tree);
  verdict.applicable = q3_applicable(prof);
  if (!verdict.applicable) return verdict;
  const Vertex center = prof.centers.front();
  for (Vertex w : prof.almost_central)
    verdict.cases.push_back({detail::assignment_name(center, w), exists_alpha_with(tree, center, w, options)});
  return verdict;
}

/// Graceful labeling with the (single) center labeled 0.
inline ProbeVerdict probe_zero_centered(const Tree& tree, const SearchOptions& options = {}) {
  auto verdict = detail::start_verdict(ProbeKind::zero, tree);
  const auto prof = profile(tree);
  verdict.applicable = prof.centers.size() == 1;
  if (!verdict.applicable) return verdict;
  ConstraintSet cs;
  cs.zero_on = prof.centers.front();
  verdict.cases.push_back({"zero=" + std::to_string(*cs.zero_on), search_graceful(tree, cs, options)});
  return verdict;
}

/// True iff the single-center tree admits a graceful labeling with the center labeled 0.
inline bool zero_centered(const Tree& tree, const SearchOptions& options = {}) {
  const auto verdict = probe_zero_centered(tree, options);
  if (!verdict.applicable) throw Error("zero_centered needs a tree with a single center");
  return verdict.any_sat();
}

inline ProbeVerdict run_probe(ProbeKind kind, const Tree& tree, const SearchOptions& options = {}) {
  switch (kind) {
    case ProbeKind::q1: return probe_q1(tree, options);
    case ProbeKind::q2: return probe_q2(tree, options);
    case ProbeKind::q3: return probe_q3(tree, options);
    case ProbeKind::zero: return probe_zero_centered(tree, options);
  }
  throw Error("unknown probe");
}

struct HuntEntry {
  int n = 0;
  Tree tree;
  ProbeVerdict verdict;
};

struct HuntReport {
  ProbeKind kind = ProbeKind::q1;
  int n_max = 0;
  int trees_examined = 0;
  std::vector<HuntEntry> entries;  // applicable trees, by n then canonical code

  std::vector<const HuntEntry*> failures() const {
    std::vector<const HuntEntry*> out;
    for (const auto& e : entries)
      if (e.verdict.failure()) out.push_back(&e);
    return out;
  }
};

/// Runs a probe over every isomorphism class in the family with n <= n_max.
inline HuntReport hunt(int n_max, const FamilyFilter& filter, ProbeKind kind, const SearchOptions& options = {},
                       int ceiling = kDefaultFamilyCeiling) {
  if (n_max < 1 || n_max > ceiling)
    throw Error("hunt supports 1 <= n_max <= " + std::to_string(ceiling) + ", got " + std::to_string(n_max));
  HuntReport report;
  report.kind = kind;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    for (Tree& t : generate_trees(n, ceiling)) {
      if (!filter.accepts(t)) continue;
      ++report.trees_examined;
      auto verdict = run_probe(kind, t, options);
      if (verdict.applicable) report.entries.push_back({n, std::move(t), std::move(verdict)});
    }
  }
  return report;
}

struct RelaxedSReport {
  SearchCertificate v2_critical;  // α-labeling of S with v2 carrying the critical number
  SearchCertificate v2_max;       // α-labeling of S with v2 carrying n-1
};

inline RelaxedSReport relaxed_s_check(const SearchOptions& options = {}) {
  const Tree s = fixtures::tree_s();
  ConstraintSet crit;
  crit.require_alpha = true;
  crit.critical_on = fixtures::s::v2;
  ConstraintSet max;
  max.require_alpha = true;
  max.max_on = fixtures::s::v2;
  return {search_graceful(s, crit, options), search_graceful(s, max, options)};
}

}  // namespace graceful
