#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graceful/error.hpp"

namespace graceful {

using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable tree on vertices 0..n-1. Construction validates the tree
/// invariants; a Tree object that exists is always a tree.
class Tree {
 public:
  /// Labels are packed into 64-bit masks by the search engine.
  static constexpr int kMaxVertices = 64;

  static Tree from_edges(int n, std::vector<Edge> edges) {
    if (n < 1) throw TreeError(TreeError::Kind::malformed, "vertex count must be positive");
    if (n > kMaxVertices)
      throw TreeError(TreeError::Kind::too_large,
                      "vertex count " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));

    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const Edge& e : edges) {
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
        throw TreeError(TreeError::Kind::out_of_range, "edge (" + std::to_string(e.u) + "," +
                                                           std::to_string(e.v) + ") has a vertex outside 0.." +
                                                           std::to_string(n - 1));
      if (e.u == e.v) throw TreeError(TreeError::Kind::self_loop, "self-loop on vertex " + std::to_string(e.u));
      if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
        throw TreeError(TreeError::Kind::duplicate_edge,
                        "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
      adj[static_cast<std::size_t>(e.u)].push_back(e.v);
      adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }

    // connectivity first: too few edges always shows up as a disconnected graph
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{0};
    reached[0] = true;
    int count = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : adj[static_cast<std::size_t>(x)]) {
        if (!reached[static_cast<std::size_t>(y)]) {
          reached[static_cast<std::size_t>(y)] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    if (count != n) throw TreeError(TreeError::Kind::disconnected, "graph is disconnected");
    if (static_cast<int>(edges.size()) != n - 1)
      throw TreeError(TreeError::Kind::edge_count, "expected " + std::to_string(n - 1) + " edges, got " +
                                                       std::to_string(edges.size()));

    for (auto& list : adj) std::sort(list.begin(), list.end());
    return Tree(n, std::move(edges), std::move(adj));
  }

  int size() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool adjacent(Vertex a, Vertex b) const {
    auto nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// BFS distances from `source`.
  std::vector<int> distances_from(Vertex source) const {
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::queue<Vertex> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push(source);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      for (Vertex y : neighbors(x)) {
        if (dist[static_cast<std::size_t>(y)] < 0) {
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          q.push(y);
        }
      }
    }
    return dist;
  }

  /// Vertex sequence of the unique path from `from` to `to`.
  std::vector<Vertex> path_between(Vertex from, Vertex to) const {
    std::vector<Vertex> parent(static_cast<std::size_t>(n_), -1);
    std::queue<Vertex> q;
    parent[static_cast<std::size_t>(from)] = from;
    q.push(from);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      if (x == to) break;
      for (Vertex y : neighbors(x)) {
        if (parent[static_cast<std::size_t>(y)] < 0) {
          parent[static_cast<std::size_t>(y)] = x;
          q.push(y);
        }
      }
    }
    std::vector<Vertex> path{to};
    while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
    std::reverse(path.begin(), path.end());
    return path;
  }

  /// Same tree with vertex v renamed to mapping[v].
  Tree relabeled(std::span<const Vertex> mapping) const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_)
      out.push_back({mapping[static_cast<std::size_t>(e.u)], mapping[static_cast<std::size_t>(e.v)]});
    return from_edges(n_, std::move(out));
  }

 private:
  Tree(int n, std::vector<Edge> edges, std::vector<std::vector<Vertex>> adj)
      : n_(n), edges_(std::move(edges)), adj_(std::move(adj)) {}

  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<int> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    const auto consumed = static_cast<std::size_t>(ptr - (line.data() + pos));
    if (ec != std::errc{} || consumed == 0 ||
        (pos + consumed < line.size() && line[pos + consumed] != ' ' && line[pos + consumed] != '\t'))
      throw TreeError(TreeError::Kind::malformed,
                      "line " + std::to_string(line_no) + ": expected integers, got '" + std::string(line) + "'");
    values.push_back(value);
    pos += consumed;
  }
  return values;
}

}  // namespace detail

/// Parses the edge-list format: a line holding n, then one "u v" line per
/// edge. '#' starts a comment. ';' is accepted as a line separator so the
/// single-line form written by to_edge_list(tree, true) parses back.
inline Tree parse_tree(std::string_view text) {
  std::optional<int> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find_first_of("\n;", start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    auto values = detail::parse_ints(line, line_no);
    if (!n) {
      if (values.size() != 1)
        throw TreeError(TreeError::Kind::malformed,
                        "line " + std::to_string(line_no) + ": expected the vertex count");
      n = values[0];
    } else {
      if (values.size() != 2)
        throw TreeError(TreeError::Kind::malformed,
                        "line " + std::to_string(line_no) + ": expected an edge 'u v'");
      edges.push_back({values[0], values[1]});
    }
  }
  if (!n) throw TreeError(TreeError::Kind::malformed, "empty edge list");
  return Tree::from_edges(*n, std::move(edges));
}

/// Edge-list text; single_line joins the lines with ';'.
inline std::string to_edge_list(const Tree& tree, bool single_line = false) {
  const char sep = single_line ? ';' : '\n';
  std::ostringstream out;
  out << tree.size();
  for (const Edge& e : tree.edges()) out << sep << e.u << ' ' << e.v;
  if (!single_line) out << '\n';
  return out.str();
}

}  // namespace graceful
