#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "graceful/fixtures.hpp"
#include "graceful/profile.hpp"
#include "graceful/tree.hpp"
#include "test_oracles.hpp"

namespace graceful {
namespace {

namespace ft = fixtures::t;
namespace fs = fixtures::s;

TEST(ParseTree, SingleEdge) {
  const Tree t = parse_tree("2\n0 1");
  EXPECT_EQ(t.size(), 2);
  ASSERT_EQ(t.edges().size(), 1u);
  EXPECT_EQ(t.edges()[0], (Edge{0, 1}));
}

TEST(ParseTree, FixtureTextForT) {
  const Tree t = parse_tree("# tree T\n6\n0 2\n1 2\n2 3   # v1 - v\n3 4\n\n4 5\n");
  EXPECT_EQ(to_edge_list(t), to_edge_list(fixtures::tree_t()));
}

TEST(ParseTree, SemicolonForm) {
  const Tree t = fixtures::tree_s();
  EXPECT_EQ(to_edge_list(parse_tree(to_edge_list(t, true))), to_edge_list(t));
}

TEST(ParseTree, Errors) {
  auto kind_of = [](std::string_view text) {
    try {
      parse_tree(text);
    } catch (const TreeError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error for: " << text;
    return TreeError::Kind::malformed;
  };
  EXPECT_EQ(kind_of("4\n0 1\n2 3"), TreeError::Kind::disconnected);
  EXPECT_EQ(kind_of("3\n0 1\n1 x"), TreeError::Kind::malformed);
  EXPECT_EQ(kind_of("3\n0 1 2\n1 2"), TreeError::Kind::malformed);
  EXPECT_EQ(kind_of(""), TreeError::Kind::malformed);
  EXPECT_EQ(kind_of("3\n0 1\n1 3"), TreeError::Kind::out_of_range);
  EXPECT_EQ(kind_of("3\n0 1\n1 1"), TreeError::Kind::self_loop);
  EXPECT_EQ(kind_of("3\n0 1\n1 0\n1 2"), TreeError::Kind::duplicate_edge);
  EXPECT_EQ(kind_of("3\n0 1\n1 2\n0 2"), TreeError::Kind::edge_count);
  EXPECT_EQ(kind_of("65\n"), TreeError::Kind::too_large);
}

TEST(Profile, TreeT) {
  const auto p = profile(fixtures::tree_t());
  EXPECT_EQ(p.diameter, 4);
  EXPECT_EQ(p.centers, std::vector<Vertex>{ft::v});
  EXPECT_EQ(p.almost_central, (std::vector<Vertex>{ft::v1, ft::v2}));
  EXPECT_EQ(p.k_distance, 1);
  EXPECT_TRUE(p.is_caterpillar());
  EXPECT_EQ(p.bipartition.first, (std::vector<Vertex>{0, 1, 3, 5}));
  EXPECT_EQ(p.bipartition.second, (std::vector<Vertex>{ft::v1, ft::v2}));
  EXPECT_EQ(p.longest_paths.size(), 2u);
}

TEST(Profile, TreeS) {
  const auto p = profile(fixtures::tree_s());
  EXPECT_EQ(p.diameter, 5);
  EXPECT_EQ(p.centers, (std::vector<Vertex>{fs::v, fs::v2}));
  EXPECT_EQ(p.k_distance, 1);
  EXPECT_EQ(p.bipartition.first, (std::vector<Vertex>{fs::u1, fs::u2, fs::v, fs::u3}));
  EXPECT_EQ(p.bipartition.second, (std::vector<Vertex>{fs::v1, fs::v2, fs::v3}));
}

TEST(Profile, SmallCases) {
  const auto p2 = profile(fixtures::path(2));
  EXPECT_EQ(p2.diameter, 1);
  EXPECT_EQ(p2.centers, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(p2.k_distance, 0);

  const auto p1 = profile(Tree::from_edges(1, {}));
  EXPECT_EQ(p1.diameter, 0);
  EXPECT_EQ(p1.centers, std::vector<Vertex>{0});
  EXPECT_EQ(p1.k_distance, 0);

  const auto star = profile(fixtures::star(4));
  EXPECT_EQ(star.diameter, 2);
  EXPECT_EQ(star.k_distance, 1);
  EXPECT_EQ(star.almost_central.size(), 4u);
}

TEST(Profile, SpiderIsThreeDistant) {
  // three legs of length 3 from vertex 0: every longest path misses one leg entirely
  const Tree spider = Tree::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 7}, {7, 8}, {8, 9}});
  const auto p = profile(spider);
  EXPECT_EQ(p.diameter, 6);
  EXPECT_EQ(p.k_distance, 3);
  EXPECT_FALSE(p.is_lobster());
}

TEST(Profile, PathLimitTruncates) {
  const auto p = profile(fixtures::star(5), {.path_limit = 3});
  EXPECT_TRUE(p.paths_truncated);
  EXPECT_EQ(p.longest_paths.size(), 3u);
}

// Structural invariants on every labeled tree with n <= 6.
TEST(Profile, InvariantsOnAllSmallTrees) {
  for (int n = 1; n <= 6; ++n) {
    testing::for_each_labeled_tree(n, [&](const Tree& t) {
      const auto p = profile(t);
      EXPECT_EQ(p.centers.size(), p.diameter % 2 == 0 ? 1u : 2u);
      EXPECT_EQ(p.k_distance == 0, static_cast<int>(t.edges().size()) == p.diameter);
      for (Vertex w : p.almost_central)
        EXPECT_TRUE(std::any_of(p.centers.begin(), p.centers.end(), [&](Vertex c) { return t.adjacent(c, w); }));
      for (const auto& path : p.longest_paths) {
        ASSERT_EQ(static_cast<int>(path.size()), p.diameter + 1);
        if (n > 1) {
          EXPECT_EQ(t.degree(path.front()), 1);
          EXPECT_EQ(t.degree(path.back()), 1);
        }
      }
      EXPECT_EQ(p.bipartition.first.size() + p.bipartition.second.size(), static_cast<std::size_t>(n));
      for (const Edge& e : t.edges()) EXPECT_NE(p.side_of(e.u), p.side_of(e.v));
    });
  }
}

TEST(CanonicalCode, PathsAndStars) {
  const std::string p3 = canonical_code(fixtures::path(3));
  EXPECT_EQ(canonical_code(Tree::from_edges(3, {{1, 0}, {0, 2}})), p3);
  EXPECT_EQ(canonical_code(Tree::from_edges(3, {{2, 1}, {2, 0}})), p3);
  EXPECT_NE(canonical_code(fixtures::tree_t()), canonical_code(fixtures::tree_s()));

  const Tree star_a = fixtures::star(3);
  const Tree star_b = Tree::from_edges(4, {{2, 0}, {2, 1}, {3, 2}});
  ASSERT_TRUE(testing::brute_force_isomorphic(star_a, star_b));
  EXPECT_EQ(canonical_code(star_a), canonical_code(star_b));
}

// canonical_code equality <=> explicit isomorphism, over all labeled trees with n <= 7.
TEST(CanonicalCode, MatchesBruteForceIsomorphism) {
  for (int n = 1; n <= 7; ++n) {
    // one representative per code, then every tree is compared with each representative
    std::vector<std::pair<std::string, Tree>> reps;
    testing::for_each_labeled_tree(n, [&](const Tree& t) {
      const std::string code = canonical_code(t);
      bool matched = false;
      for (const auto& [rep_code, rep] : reps) {
        const bool iso = testing::brute_force_isomorphic(t, rep);
        EXPECT_EQ(iso, code == rep_code) << to_edge_list(t, true) << " vs " << to_edge_list(rep, true);
        matched = matched || iso;
      }
      if (!matched) reps.emplace_back(code, t);
    });
  }
}

TEST(CanonicalCode, ProfileInvariantUnderRenumbering) {
  std::mt19937 rng(7);
  for (const Tree& t : {fixtures::tree_t(), fixtures::tree_s(), fixtures::p6()}) {
    std::vector<Vertex> perm(static_cast<std::size_t>(t.size()));
    std::iota(perm.begin(), perm.end(), 0);
    for (int round = 0; round < 20; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const Tree r = t.relabeled(perm);
      EXPECT_EQ(canonical_code(r), canonical_code(t));
      const auto a = profile(t);
      const auto b = profile(r);
      EXPECT_EQ(a.diameter, b.diameter);
      EXPECT_EQ(a.k_distance, b.k_distance);
      std::vector<Vertex> mapped;
      for (Vertex c : a.centers) mapped.push_back(perm[static_cast<std::size_t>(c)]);
      std::sort(mapped.begin(), mapped.end());
      EXPECT_EQ(mapped, b.centers);
      mapped.clear();
      for (Vertex w : a.almost_central) mapped.push_back(perm[static_cast<std::size_t>(w)]);
      std::sort(mapped.begin(), mapped.end());
      EXPECT_EQ(mapped, b.almost_central);
    }
  }
}

}  // namespace
}  // namespace graceful
