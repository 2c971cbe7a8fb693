#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "graceful/tree.hpp"

namespace graceful {

struct ProfileOptions {
  /// Longest paths are enumerated up to this many; k_distance is taken over the enumerated ones.
  std::size_t path_limit = 10000;
};

/// Derived structure of a tree.
struct TreeProfile {
  int diameter = 0;
  std::vector<Vertex> centers;                    // 1 or 2 vertices, ascending
  std::vector<std::vector<Vertex>> longest_paths;  // each starts at its smaller endpoint
  bool paths_truncated = false;
  int k_distance = 0;
  std::vector<Vertex> almost_central;  // ascending; centers themselves excluded
  std::pair<std::vector<Vertex>, std::vector<Vertex>> bipartition;  // first class contains vertex 0

  bool is_path() const noexcept { return k_distance == 0; }
  bool is_caterpillar() const noexcept { return k_distance <= 1; }
  bool is_lobster() const noexcept { return k_distance <= 2; }

  /// Index (0 or 1) of the bipartition class holding v.
  int side_of(Vertex v) const {
    return std::binary_search(bipartition.first.begin(), bipartition.first.end(), v) ? 0 : 1;
  }
  const std::vector<Vertex>& side(int index) const { return index == 0 ? bipartition.first : bipartition.second; }
};

/// Centers by iterated leaf removal.
inline std::vector<Vertex> centers_of(const Tree& tree) {
  const int n = tree.size();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[static_cast<std::size_t>(v)] = tree.degree(v);
    if (degree[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex nb : tree.neighbors(leaf)) {
        if (--degree[static_cast<std::size_t>(nb)] == 1) next.push_back(nb);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

inline TreeProfile profile(const Tree& tree, const ProfileOptions& options = {}) {
  const int n = tree.size();
  TreeProfile p;

  std::vector<std::vector<int>> dist;
  dist.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) dist.push_back(tree.distances_from(v));
  auto d = [&](Vertex a, Vertex b) { return dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };

  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a; b < n; ++b) p.diameter = std::max(p.diameter, d(a, b));

  p.centers = centers_of(tree);

  std::vector<std::pair<Vertex, Vertex>> ends;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a; b < n; ++b)
      if (d(a, b) == p.diameter) ends.emplace_back(a, b);

  p.k_distance = n;
  for (auto [a, b] : ends) {
    if (p.longest_paths.size() >= options.path_limit) {
      p.paths_truncated = true;
      break;
    }
    auto path = tree.path_between(a, b);
    int farthest = 0;
    for (Vertex x = 0; x < n; ++x) {
      int nearest = n;
      for (Vertex y : path) nearest = std::min(nearest, d(x, y));
      farthest = std::max(farthest, nearest);
    }
    p.k_distance = std::min(p.k_distance, farthest);
    p.longest_paths.push_back(std::move(path));
  }

  // x lies on a longest path iff it sits between the ends of one
  for (Vertex x = 0; x < n; ++x) {
    if (std::binary_search(p.centers.begin(), p.centers.end(), x)) continue;
    bool next_to_center = std::any_of(p.centers.begin(), p.centers.end(),
                                      [&](Vertex c) { return tree.adjacent(c, x); });
    if (!next_to_center) continue;
    bool on_longest = std::any_of(ends.begin(), ends.end(),
                                  [&](auto ab) { return d(ab.first, x) + d(x, ab.second) == p.diameter; });
    if (on_longest) p.almost_central.push_back(x);
  }

  for (Vertex v = 0; v < n; ++v) (d(0, v) % 2 == 0 ? p.bipartition.first : p.bipartition.second).push_back(v);
  return p;
}

namespace detail {

inline std::string rooted_code(const Tree& tree, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex c : tree.neighbors(v))
    if (c != parent) children.push_back(rooted_code(tree, c, v));
  std::sort(children.begin(), children.end());
  std::string code = "(";
  for (const auto& c : children) code += c;
  code += ')';
  return code;
}

}  // namespace detail

/// AHU encoding of the tree rooted at `root`: "(" + sorted child codes + ")".
inline std::string rooted_code(const Tree& tree, Vertex root) { return detail::rooted_code(tree, root, -1); }

/// Isomorphism invariant: the smallest center-rooted AHU encoding.
inline std::string canonical_code(const Tree& tree) {
  std::string best;
  for (Vertex c : centers_of(tree)) {
    auto code = rooted_code(tree, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace graceful
