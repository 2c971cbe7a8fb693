#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "graceful/error.hpp"
#include "graceful/labeling.hpp"
#include "graceful/profile.hpp"
#include "graceful/tree.hpp"

namespace graceful {

enum class SearchMode { first, all, count };
enum class Status { sat, unsat };

/// Restrictions on the labelings a search may return.
struct ConstraintSet {
  std::map<Vertex, Label> fixed;
  bool require_alpha = false;
  std::optional<Vertex> critical_on;  // implies require_alpha
  std::optional<Vertex> max_on;
  std::optional<Vertex> zero_on;

  bool alpha() const noexcept { return require_alpha || critical_on.has_value(); }

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

struct SearchOptions {
  SearchMode mode = SearchMode::first;
  unsigned threads = 1;
};

/// SAT witnesses or an exhaustion record for one constrained search.
struct SearchCertificate {
  std::string tree_code;
  ConstraintSet constraints;
  SearchMode mode = SearchMode::first;
  Status status = Status::unsat;
  std::vector<Labeling> witnesses;  // lexicographic in mode=all, empty in mode=count
  std::uint64_t solution_count = 0;
  std::uint64_t nodes_explored = 0;
  bool oracle_checked = false;
  std::optional<Label> forced_critical;  // set when critical_on pins the critical number

  bool sat() const noexcept { return status == Status::sat; }
};

/// Throws ConstraintError for out-of-range or contradictory constraints.
inline void validate_constraints(const Tree& tree, const ConstraintSet& cs) {
  const int n = tree.size();
  auto check_vertex = [&](Vertex v, const char* what) {
    if (v < 0 || v >= n)
      throw ConstraintError(std::string(what) + " vertex " + std::to_string(v) + " is outside 0.." +
                            std::to_string(n - 1));
  };

  std::map<Vertex, Label> required;
  std::map<Label, Vertex> owner;
  auto require = [&](Vertex v, Label l, const char* what) {
    check_vertex(v, what);
    if (l < 0 || l >= n)
      throw ConstraintError(std::string(what) + " label " + std::to_string(l) + " is outside 0.." +
                            std::to_string(n - 1));
    if (auto it = required.find(v); it != required.end() && it->second != l)
      throw ConstraintError("vertex " + std::to_string(v) + " is required to take both " +
                            std::to_string(it->second) + " and " + std::to_string(l));
    if (auto it = owner.find(l); it != owner.end() && it->second != v)
      throw ConstraintError("label " + std::to_string(l) + " is required on both vertex " +
                            std::to_string(it->second) + " and vertex " + std::to_string(v));
    required[v] = l;
    owner[l] = v;
  };

  for (auto [v, l] : cs.fixed) require(v, l, "fixed");
  if (cs.zero_on) require(*cs.zero_on, 0, "zero_on");
  if (cs.max_on) require(*cs.max_on, n - 1, "max_on");
  if (cs.critical_on) check_vertex(*cs.critical_on, "critical_on");
}

/// In an α-labeling the low side holds exactly the labels 0..c, so a low
/// side of size a forces c = a - 1.
inline Label forced_critical_number(const TreeProfile& prof, Vertex low_vertex) {
  return static_cast<Label>(prof.side(prof.side_of(low_vertex)).size()) - 1;
}

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

/// Labels lo..hi inclusive; empty when lo > hi.
inline Mask range_mask(int lo, int hi) {
  Mask m = 0;
  for (int i = lo; i <= hi; ++i) m |= bit(i);
  return m;
}

/// One unit of work: label domains for every vertex plus a fixed root label.
struct Job {
  const std::vector<Mask>* domains;
  Label root_label;
};

struct JobResult {
  std::vector<Labeling> witnesses;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

/// Backtracking over a BFS order from a center. Each placed vertex fixes the
/// weight of the edge to its parent; used labels and weights live in bitmasks.
class Backtracker {
 public:
  Backtracker(const Tree& tree, SearchMode mode) : tree_(tree), mode_(mode), n_(tree.size()) {
    const Vertex root = centers_of(tree).front();
    parent_.assign(static_cast<std::size_t>(n_), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    std::queue<Vertex> q;
    q.push(root);
    seen[static_cast<std::size_t>(root)] = true;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      order_.push_back(x);
      for (Vertex y : tree.neighbors(x)) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          parent_[static_cast<std::size_t>(y)] = x;
          q.push(y);
        }
      }
    }
  }

  Vertex root() const { return order_.front(); }

  JobResult run(const Job& job) const {
    State st(n_);
    st.domains = job.domains;
    JobResult out;
    const Vertex r = root();
    place(st, r, job.root_label, 0);
    ++out.nodes;
    descend(st, 1, out);
    return out;
  }

 private:
  struct State {
    explicit State(int n)
        : labels(static_cast<std::size_t>(n), -1), owner(static_cast<std::size_t>(n), -1) {}
    const std::vector<Mask>* domains = nullptr;
    std::vector<Label> labels;
    std::vector<Vertex> owner;  // label -> vertex
    Mask used_labels = 0;
    Mask used_weights = 0;
    bool stop = false;
  };

  static void place(State& st, Vertex v, Label l, int weight) {
    st.labels[static_cast<std::size_t>(v)] = l;
    st.owner[static_cast<std::size_t>(l)] = v;
    st.used_labels |= bit(l);
    if (weight > 0) st.used_weights |= bit(weight);
  }

  static void unplace(State& st, Vertex v, Label l, int weight) {
    st.labels[static_cast<std::size_t>(v)] = -1;
    st.owner[static_cast<std::size_t>(l)] = -1;
    st.used_labels &= ~bit(l);
    if (weight > 0) st.used_weights &= ~bit(weight);
  }

  // The only pair at distance n-1 is {0, n-1}, so those labels must sit on adjacent vertices.
  bool extreme_pair_ok(const State& st, Vertex v, Label l) const {
    if (n_ < 2) return true;
    Label other;
    if (l == 0)
      other = n_ - 1;
    else if (l == n_ - 1)
      other = 0;
    else
      return true;
    const Vertex w = st.owner[static_cast<std::size_t>(other)];
    return w < 0 || tree_.adjacent(v, w);
  }

  void descend(State& st, std::size_t depth, JobResult& out) const {
    if (depth == order_.size()) {
      ++out.count;
      if (mode_ != SearchMode::count) out.witnesses.emplace_back(st.labels);
      if (mode_ == SearchMode::first) st.stop = true;
      return;
    }
    const Vertex v = order_[depth];
    const Label parent_label = st.labels[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
    Mask candidates = (*st.domains)[static_cast<std::size_t>(v)] & ~st.used_labels;
    while (candidates != 0) {
      const Label l = std::countr_zero(candidates);
      candidates &= candidates - 1;
      const int w = l > parent_label ? l - parent_label : parent_label - l;
      if ((st.used_weights & bit(w)) != 0) continue;
      if (!extreme_pair_ok(st, v, l)) continue;
      ++out.nodes;
      place(st, v, l, w);
      descend(st, depth + 1, out);
      unplace(st, v, l, w);
      if (st.stop) return;
    }
  }

  const Tree& tree_;
  SearchMode mode_;
  int n_;
  std::vector<Vertex> order_;
  std::vector<Vertex> parent_;
};

inline std::vector<JobResult> run_jobs(const Backtracker& engine, const std::vector<Job>& jobs, SearchMode mode,
                                       unsigned threads) {
  std::vector<JobResult> results(jobs.size());
  if (threads <= 1 || jobs.size() <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      results[i] = engine.run(jobs[i]);
      if (mode == SearchMode::first && !results[i].witnesses.empty()) break;
    }
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{jobs.size()};  // lowest job index holding a witness (mode=first)
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      if (mode == SearchMode::first && i > best.load()) continue;
      results[i] = engine.run(jobs[i]);
      if (mode == SearchMode::first && !results[i].witnesses.empty()) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(jobs.size()));
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace detail

/// Exhaustive constrained search for graceful (optionally α-) labelings.
///
/// Deterministic for any thread count: the work is split by the label on the
/// root vertex and merged in root-label order. mode=first returns the first
/// witness in that order together with the node count a single-threaded run
/// would report; mode=all returns every witness sorted lexicographically.
inline SearchCertificate search_graceful(const Tree& tree, const ConstraintSet& constraints,
                                         const SearchOptions& options = {}) {
  validate_constraints(tree, constraints);
  const int n = tree.size();
  SearchCertificate cert;
  cert.tree_code = canonical_code(tree);
  cert.constraints = constraints;
  cert.mode = options.mode;

  using detail::Mask;
  std::vector<Mask> base(static_cast<std::size_t>(n), detail::range_mask(0, n - 1));
  auto restrict = [](std::vector<Mask>& d, Vertex v, Mask m) { d[static_cast<std::size_t>(v)] &= m; };
  for (auto [v, l] : constraints.fixed) restrict(base, v, detail::bit(l));
  if (constraints.zero_on) restrict(base, *constraints.zero_on, detail::bit(0));
  if (constraints.max_on) restrict(base, *constraints.max_on, detail::bit(n - 1));

  // one domain vector per admissible low side
  std::vector<std::vector<Mask>> variants;
  if (!constraints.alpha()) {
    variants.push_back(base);
  } else {
    const TreeProfile prof = profile(tree);
    std::vector<int> low_sides{0, 1};
    if (constraints.critical_on) {
      low_sides = {prof.side_of(*constraints.critical_on)};
      cert.forced_critical = forced_critical_number(prof, *constraints.critical_on);
    }
    for (int s : low_sides) {
      const auto& low = prof.side(s);
      if (low.empty()) continue;
      const Label c = static_cast<Label>(low.size()) - 1;
      std::vector<Mask> d = base;
      for (Vertex v = 0; v < n; ++v)
        restrict(d, v, prof.side_of(v) == s ? detail::range_mask(0, c) : detail::range_mask(c + 1, n - 1));
      if (constraints.critical_on) restrict(d, *constraints.critical_on, detail::bit(c));
      variants.push_back(std::move(d));
    }
  }

  detail::Backtracker engine(tree, options.mode);
  std::vector<detail::Job> jobs;
  for (const auto& d : variants) {
    if (std::any_of(d.begin(), d.end(), [](Mask m) { return m == 0; })) continue;
    Mask roots = d[static_cast<std::size_t>(engine.root())];
    while (roots != 0) {
      jobs.push_back({&d, std::countr_zero(roots)});
      roots &= roots - 1;
    }
  }

  auto results = detail::run_jobs(engine, jobs, options.mode, options.threads);
  for (auto& r : results) {
    cert.nodes_explored += r.nodes;
    cert.solution_count += r.count;
    for (auto& w : r.witnesses) cert.witnesses.push_back(std::move(w));
    if (options.mode == SearchMode::first && cert.solution_count > 0) break;
  }
  if (options.mode == SearchMode::all) std::sort(cert.witnesses.begin(), cert.witnesses.end());
  cert.status = cert.solution_count > 0 ? Status::sat : Status::unsat;
  return cert;
}

/// Largest tree the permutation oracle accepts.
inline constexpr int kOracleMaxVertices = 9;

/// Tries all n! assignments and filters them through the labeling predicates.
/// Shares no code with the backtracking engine.
inline SearchCertificate brute_force_oracle(const Tree& tree, const ConstraintSet& constraints) {
  const int n = tree.size();
  if (n > kOracleMaxVertices)
    throw Error("brute-force oracle supports at most " + std::to_string(kOracleMaxVertices) + " vertices, got " +
                std::to_string(n));
  validate_constraints(tree, constraints);

  SearchCertificate cert;
  cert.tree_code = canonical_code(tree);
  cert.constraints = constraints;
  cert.mode = SearchMode::all;
  cert.oracle_checked = true;

  std::vector<Label> labels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i;
  do {
    ++cert.nodes_explored;
    const Labeling candidate(labels);
    auto at = [&](Vertex v) { return labels[static_cast<std::size_t>(v)]; };
    if (constraints.zero_on && at(*constraints.zero_on) != 0) continue;
    if (constraints.max_on && at(*constraints.max_on) != n - 1) continue;
    if (std::any_of(constraints.fixed.begin(), constraints.fixed.end(),
                    [&](const auto& kv) { return at(kv.first) != kv.second; }))
      continue;
    if (!is_graceful(tree, candidate)) continue;
    if (constraints.alpha()) {
      auto c = is_alpha(tree, candidate);
      if (!c) continue;
      if (constraints.critical_on && at(*constraints.critical_on) != *c) continue;
    }
    cert.witnesses.push_back(candidate);
  } while (std::next_permutation(labels.begin(), labels.end()));

  cert.solution_count = cert.witnesses.size();
  cert.status = cert.witnesses.empty() ? Status::unsat : Status::sat;
  return cert;
}

/// α-labeling with `critical_on` carrying the critical number and `max_on`
/// carrying n-1. The critical number is forced by the size of the colour
/// class of `critical_on`; when `max_on` shares that class the result is
/// UNSAT without any search.
inline SearchCertificate exists_alpha_with(const Tree& tree, Vertex critical_on, Vertex max_on,
                                           const SearchOptions& options = {}) {
  if (critical_on == max_on)
    throw ConstraintError("critical_on and max_on must be distinct vertices (both are " +
                          std::to_string(critical_on) + ")");
  ConstraintSet cs;
  cs.require_alpha = true;
  cs.critical_on = critical_on;
  cs.max_on = max_on;
  return search_graceful(tree, cs, options);
}

}  // namespace graceful
