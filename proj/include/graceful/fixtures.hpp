#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "graceful/tree.hpp"

namespace graceful::fixtures {

/// T: path of length 4 through v with an extra leaf on v1.
/// 0 = off-path leaf, 1 = path end, 2 = v1, 3 = v, 4 = v2, 5 = path end.
namespace t {
inline constexpr Vertex leaf0 = 0;
inline constexpr Vertex leaf1 = 1;
inline constexpr Vertex v1 = 2;
inline constexpr Vertex v = 3;
inline constexpr Vertex v2 = 4;
inline constexpr Vertex end = 5;
}  // namespace t

/// S: path u2 v1 v v2 u3 v3 with an extra leaf u1 on v1.
namespace s {
inline constexpr Vertex u1 = 0;
inline constexpr Vertex u2 = 1;
inline constexpr Vertex v1 = 2;
inline constexpr Vertex v = 3;
inline constexpr Vertex v2 = 4;
inline constexpr Vertex u3 = 5;
inline constexpr Vertex v3 = 6;
}  // namespace s

inline Tree path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Tree::from_edges(n, std::move(edges));
}

/// K_{1,leaves} with the hub at vertex 0.
inline Tree star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Tree::from_edges(leaves + 1, std::move(edges));
}

inline Tree tree_t() { return Tree::from_edges(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}); }

inline Tree tree_s() { return Tree::from_edges(7, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}); }

inline Tree p6() { return path(6); }

/// Accepts "T", "S", "P6" with an optional "fixtures/" prefix.
inline std::optional<Tree> by_name(std::string_view name) {
  if (name.starts_with("fixtures/")) name.remove_prefix(9);
  if (name == "T") return tree_t();
  if (name == "S") return tree_s();
  if (name == "P6") return p6();
  return std::nullopt;
}

}  // namespace graceful::fixtures
