#include <gtest/gtest.h>

#include "graceful/fixtures.hpp"
#include "graceful/io.hpp"

namespace graceful {
namespace {

TEST(LabelingJson, ParsesBothForms) {
  EXPECT_EQ(parse_labeling("[1,3,2,5,0,4]"), (Labeling{1, 3, 2, 5, 0, 4}));
  EXPECT_EQ(parse_labeling(R"({"labels": [0, 1]})"), (Labeling{0, 1}));
  EXPECT_EQ(to_json(Labeling{2, 0, 1}).dump(), R"({"labels":[2,0,1]})");
  EXPECT_THROW(parse_labeling("[1,"), LabelingError);
  EXPECT_THROW(parse_labeling(R"({"labeling": []})"), LabelingError);
  EXPECT_THROW(parse_labeling(R"(["a"])"), LabelingError);
}

TEST(WeightReport, P6) {
  const auto j = weight_report(fixtures::p6(), Labeling{1, 3, 2, 5, 0, 4});
  EXPECT_EQ(j["weights"], Json::parse("[2,1,3,5,4]"));
  EXPECT_TRUE(j["graceful"].get<bool>());
  EXPECT_EQ(j["alpha"], 2);
  EXPECT_EQ(j["low_side"], Json::parse("[0,2,4]"));
}

TEST(WeightReport, NotGraceful) {
  const auto j = weight_report(fixtures::path(3), Labeling{0, 1, 2});
  EXPECT_FALSE(j["graceful"].get<bool>());
  EXPECT_TRUE(j["alpha"].is_null());
}

TEST(CertificateJson, Schema) {
  ConstraintSet cs;
  cs.zero_on = fixtures::t::v;
  cs.fixed = {{0, 4}};
  const auto j = to_json(search_graceful(fixtures::tree_t(), cs));
  for (const char* key : {"tree", "constraints", "status", "witnesses", "nodes_explored", "oracle_checked"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["status"], "UNSAT");
  EXPECT_EQ(j["constraints"]["zero_on"], 3);
  EXPECT_EQ(j["constraints"]["fixed"]["0"], 4);
  EXPECT_FALSE(j["oracle_checked"].get<bool>());

  const auto sat = to_json(exists_alpha_with(fixtures::p6(), 2, 3, {SearchMode::all, 1}));
  EXPECT_EQ(sat["status"], "SAT");
  EXPECT_EQ(sat["forced_critical"], 2);
  EXPECT_EQ(sat["count"], sat["witnesses"].size());
}

TEST(ProbeJson, Q1OnS) {
  const auto j = to_json(probe_q1(fixtures::tree_s()));
  EXPECT_TRUE(j["applicable"].get<bool>());
  EXPECT_TRUE(j["failure"].get<bool>());
  ASSERT_EQ(j["verdicts"].size(), 2u);
  EXPECT_EQ(j["verdicts"][0]["certificate"]["forced_critical"], 3);
  EXPECT_EQ(j["verdicts"][1]["certificate"]["forced_critical"], 2);
}

TEST(Dot, Rendering) {
  EXPECT_EQ(export_dot(fixtures::path(2)), "graph tree {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  0 -- 1;\n}\n");

  const Labeling alpha{4, 5, 0, 3, 1, 2};
  const std::string t = export_dot(fixtures::tree_t(), &alpha);
  EXPECT_NE(t.find("3 [label=\"3:3\"]"), std::string::npos);
  EXPECT_NE(t.find("2 [label=\"2:0\"]"), std::string::npos);

  const std::string s = export_dot(fixtures::tree_s());
  EXPECT_EQ(std::count(s.begin(), s.end(), '['), 7);
  EXPECT_EQ(std::count(s.begin(), s.end(), '-') / 2, 6);
}

TEST(Fixtures, ByName) {
  EXPECT_TRUE(fixtures::by_name("T").has_value());
  EXPECT_TRUE(fixtures::by_name("fixtures/P6").has_value());
  EXPECT_FALSE(fixtures::by_name("Q").has_value());
}

}  // namespace
}  // namespace graceful
