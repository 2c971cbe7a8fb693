#include <gtest/gtest.h>

#include <set>

#include "graceful/families.hpp"
#include "graceful/fixtures.hpp"
#include "test_oracles.hpp"

namespace graceful {
namespace {

std::vector<std::string> codes_of(const std::vector<Tree>& trees) {
  std::vector<std::string> out;
  for (const Tree& t : trees) out.push_back(canonical_code(t));
  return out;
}

TEST(RootedTrees, CountsMatchKnownSequence) {
  // rooted unlabeled trees: 1, 1, 2, 4, 9, 20, 48, 115
  const std::vector<int> expected{1, 1, 2, 4, 9, 20, 48, 115};
  for (int n = 1; n <= 8; ++n) {
    int count = 0;
    for_each_rooted_tree(n, [&](const std::vector<int>&) { ++count; });
    EXPECT_EQ(count, expected[static_cast<std::size_t>(n - 1)]) << "n=" << n;
  }
}

TEST(GenerateTrees, SmallCounts) {
  EXPECT_EQ(generate_trees(1).size(), 1u);
  EXPECT_EQ(generate_trees(4).size(), 2u);
  EXPECT_EQ(generate_trees(7).size(), 11u);
  EXPECT_THROW(generate_trees(0), Error);
  EXPECT_THROW(generate_trees(13), Error);
  EXPECT_EQ(generate_trees(13, 13).size(), 1301u);
}

TEST(GenerateTrees, FourVerticesArePathAndStar) {
  const auto codes = codes_of(generate_trees(4));
  const std::set<std::string> got(codes.begin(), codes.end());
  EXPECT_EQ(got, (std::set<std::string>{canonical_code(fixtures::path(4)), canonical_code(fixtures::star(3))}));
}

// Class counts agree with quotienting every Pruefer-labeled tree by canonical code.
TEST(GenerateTrees, MatchesPrueferQuotient) {
  for (int n = 1; n <= 8; ++n) {
    std::set<std::string> classes;
    testing::for_each_labeled_tree(n, [&](const Tree& t) { classes.insert(canonical_code(t)); });
    const auto codes = codes_of(generate_trees(n));
    EXPECT_EQ(std::set<std::string>(codes.begin(), codes.end()), classes) << "n=" << n;
  }
}

TEST(GenerateTrees, StrictlyIncreasingCodes) {
  for (int n = 1; n <= 10; ++n) {
    const auto codes = codes_of(generate_trees(n));
    for (std::size_t i = 1; i < codes.size(); ++i) EXPECT_LT(codes[i - 1], codes[i]);
  }
}

TEST(FilterFamily, DiameterFiveOnSixVerticesIsThePath) {
  FamilyFilter f;
  f.min_diameter = 5;
  f.max_diameter = 5;
  const auto out = filter_family(generate_trees(6), f);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(canonical_code(out[0]), canonical_code(fixtures::p6()));
}

TEST(FilterFamily, EvenCenterDiameterFourContainsT) {
  FamilyFilter f;
  f.min_diameter = 4;
  f.max_diameter = 4;
  f.center_degree = Parity::even;
  const auto codes = codes_of(filter_family(generate_trees(6), f));
  EXPECT_NE(std::find(codes.begin(), codes.end(), canonical_code(fixtures::tree_t())), codes.end());
}

TEST(FilterFamily, DiameterFiveLobstersContainS) {
  FamilyFilter f;
  f.min_diameter = 5;
  f.max_diameter = 5;
  f.max_k_distance = 2;
  f.center_count = 2;
  const auto out = filter_family(generate_trees(7), f);
  const auto codes = codes_of(out);
  EXPECT_EQ(out.size(), 2u);
  EXPECT_NE(std::find(codes.begin(), codes.end(), canonical_code(fixtures::tree_s())), codes.end());
}

TEST(FilterFamily, OddCenterDegreeExcludesT) {
  FamilyFilter f;
  f.center_degree = Parity::odd;
  EXPECT_FALSE(f.accepts(fixtures::tree_t()));
  EXPECT_TRUE(f.accepts(fixtures::star(3)));
}

}  // namespace
}  // namespace graceful
