#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graceful/error.hpp"
#include "graceful/tree.hpp"

namespace graceful {

using Label = int;

/// Vertex-indexed label assignment. Validity against a tree is checked by
/// the predicates below, not by construction.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}
  Labeling(std::initializer_list<Label> labels) : labels_(labels) {}

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  Label operator[](Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<Label>& values() const noexcept { return labels_; }

  friend auto operator<=>(const Labeling&, const Labeling&) = default;
  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<Label> labels_;
};

/// Outcome of the bipartite (critical number) test.
struct AlphaResult {
  bool is_bipartite_labeling = false;
  std::optional<Label> critical;           // max label on the low side
  std::optional<std::vector<Vertex>> low_side;  // ascending
};

/// Throws LabelingError unless `labeling` is a bijection onto {0..n-1}.
inline void validate_labeling(const Tree& tree, const Labeling& labeling) {
  const int n = tree.size();
  if (labeling.size() != n)
    throw LabelingError("labeling has " + std::to_string(labeling.size()) + " entries for " + std::to_string(n) +
                        " vertices");
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (Vertex v = 0; v < n; ++v) {
    const Label l = labeling[v];
    if (l < 0 || l >= n)
      throw LabelingError("label " + std::to_string(l) + " on vertex " + std::to_string(v) + " is outside 0.." +
                          std::to_string(n - 1));
    if (used[static_cast<std::size_t>(l)]) throw LabelingError("label " + std::to_string(l) + " used twice");
    used[static_cast<std::size_t>(l)] = true;
  }
}

/// |f(u) - f(v)| for every edge, in the tree's edge order.
inline std::vector<int> edge_weights(const Tree& tree, const Labeling& labeling) {
  validate_labeling(tree, labeling);
  std::vector<int> weights;
  weights.reserve(tree.edges().size());
  for (const Edge& e : tree.edges()) weights.push_back(std::abs(labeling[e.u] - labeling[e.v]));
  return weights;
}

inline bool is_graceful(const Tree& tree, const Labeling& labeling) {
  const auto weights = edge_weights(tree, labeling);
  std::vector<bool> seen(static_cast<std::size_t>(tree.size()), false);
  for (int w : weights) {
    if (w < 1 || seen[static_cast<std::size_t>(w)]) return false;
    seen[static_cast<std::size_t>(w)] = true;
  }
  return true;
}

/// The low side, if one exists, is the colour class holding label 0, and
/// the canonical critical number is its largest label.
inline AlphaResult bipartite_critical(const Tree& tree, const Labeling& labeling) {
  validate_labeling(tree, labeling);
  const int n = tree.size();
  Vertex zero = 0;
  while (labeling[zero] != 0) ++zero;

  const auto dist = tree.distances_from(zero);
  Label low_max = 0;
  Label high_min = n;
  std::vector<Vertex> low;
  for (Vertex v = 0; v < n; ++v) {
    if (dist[static_cast<std::size_t>(v)] % 2 == 0) {
      low_max = std::max(low_max, labeling[v]);
      low.push_back(v);
    } else {
      high_min = std::min(high_min, labeling[v]);
    }
  }
  if (low_max >= high_min) return {};
  return {true, low_max, std::move(low)};
}

/// Critical number of an α-labeling, or nullopt if `labeling` is not one.
inline std::optional<Label> is_alpha(const Tree& tree, const Labeling& labeling) {
  if (!is_graceful(tree, labeling)) return std::nullopt;
  return bipartite_critical(tree, labeling).critical;
}

/// v -> n-1-f(v). Edge weights are unchanged.
inline Labeling complement(const Labeling& labeling) {
  const int n = labeling.size();
  std::vector<Label> out(labeling.values());
  for (auto& l : out) l = n - 1 - l;
  return Labeling(std::move(out));
}

}  // namespace graceful
