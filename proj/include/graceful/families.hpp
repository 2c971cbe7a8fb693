#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graceful/error.hpp"
#include "graceful/profile.hpp"
#include "graceful/tree.hpp"

namespace graceful {

inline constexpr int kDefaultFamilyCeiling = 12;

/// Tree built from a level sequence (root at level 1, preorder). The parent
/// of entry i is the closest earlier entry one level up.
inline Tree tree_from_level_sequence(const std::vector<int>& levels) {
  const int n = static_cast<int>(levels.size());
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level(static_cast<std::size_t>(n + 2), -1);
  for (int i = 0; i < n; ++i) {
    const int lvl = levels[static_cast<std::size_t>(i)];
    if (i > 0) edges.push_back({last_at_level[static_cast<std::size_t>(lvl - 1)], i});
    last_at_level[static_cast<std::size_t>(lvl)] = i;
  }
  return Tree::from_edges(n, std::move(edges));
}

/// Visits the canonical level sequence of every rooted tree on n vertices
/// (Beyer-Hedetniemi successor rule, reverse lexicographic order).
template <typename Visitor>
void for_each_rooted_tree(int n, Visitor&& visit) {
  std::vector<int> levels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    visit(std::as_const(levels));
    int p = n - 1;
    while (p >= 0 && levels[static_cast<std::size_t>(p)] <= 2) --p;
    if (p < 0) return;
    int q = p - 1;
    while (levels[static_cast<std::size_t>(q)] != levels[static_cast<std::size_t>(p)] - 1) --q;
    for (int i = p; i < n; ++i)
      levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - (p - q))];
  }
}

/// One tree per isomorphism class on n vertices, ordered by canonical_code.
/// Rooted trees are kept only when rooted at the center with the smallest
/// rooted code, which picks out exactly one rooting per free tree.
inline std::vector<Tree> generate_trees(int n, int ceiling = kDefaultFamilyCeiling) {
  if (n < 1 || n > ceiling)
    throw Error("tree enumeration supports 1 <= n <= " + std::to_string(ceiling) + ", got " + std::to_string(n));

  std::vector<std::pair<std::string, Tree>> found;
  for_each_rooted_tree(n, [&](const std::vector<int>& levels) {
    Tree t = tree_from_level_sequence(levels);
    const auto centers = centers_of(t);
    if (!std::binary_search(centers.begin(), centers.end(), 0)) return;
    std::string code = rooted_code(t, 0);
    for (Vertex c : centers)
      if (c != 0 && rooted_code(t, c) < code) return;
    found.emplace_back(std::move(code), std::move(t));
  });

  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Tree> out;
  out.reserve(found.size());
  for (auto& [code, t] : found) out.push_back(std::move(t));
  return out;
}

enum class Parity { even, odd };

/// Conjunction of structural predicates; unset fields accept everything.
struct FamilyFilter {
  std::optional<int> min_diameter;
  std::optional<int> max_diameter;
  std::optional<int> max_k_distance;
  std::optional<Parity> center_degree;  // every center must have this degree parity
  std::optional<int> center_count;

  bool accepts(const Tree& tree, const TreeProfile& prof) const {
    if (min_diameter && prof.diameter < *min_diameter) return false;
    if (max_diameter && prof.diameter > *max_diameter) return false;
    if (max_k_distance && prof.k_distance > *max_k_distance) return false;
    if (center_count && static_cast<int>(prof.centers.size()) != *center_count) return false;
    if (center_degree) {
      const int want = *center_degree == Parity::even ? 0 : 1;
      for (Vertex c : prof.centers)
        if (tree.degree(c) % 2 != want) return false;
    }
    return true;
  }

  bool accepts(const Tree& tree) const { return accepts(tree, profile(tree)); }
};

inline std::vector<Tree> filter_family(const std::vector<Tree>& trees, const FamilyFilter& filter) {
  std::vector<Tree> out;
  for (const Tree& t : trees)
    if (filter.accepts(t)) out.push_back(t);
  return out;
}

}  // namespace graceful
