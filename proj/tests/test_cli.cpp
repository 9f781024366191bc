#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using namespace powerchord;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

} // namespace

TEST(Cli, BuildEdgeList) {
  const auto r = run({"build", "C6", "--format", "edgelist", "--graph", "power"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), 13u);
}

TEST(Cli, BuildProperJson) {
  const auto r = run({"build", "D5", "--graph", "proper", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["edges"].size(), 6u);
}

TEST(Cli, BuildOtherGraphKinds) {
  EXPECT_EQ(run({"build", "S3", "--graph", "enhanced"}).code, 0);
  EXPECT_EQ(lines(run({"build", "C6", "--graph", "directed"}).out), 15u);
  EXPECT_EQ(lines(run({"build", "C6", "--graph", "prime"}).out), 1u);
  EXPECT_EQ(run({"build", "S3", "--format", "dot"}).out.rfind("graph {", 0), 0u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"build", "Cx"}).code, 2);
  EXPECT_EQ(run({"build", "C6", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"census", "--orders", "48..48"}).code, 3);
  EXPECT_EQ(run({"census", "--orders", "x"}).code, 2);
  EXPECT_EQ(run({"predicate", "psl2", "6"}).code, 2);
  EXPECT_EQ(run({"build", "G(48,1)"}).code, 3);
}

TEST(Cli, Chordal) {
  auto j = json::parse(run({"chordal", "C12"}).out);
  EXPECT_TRUE(j["chordal"].get<bool>());
  j = json::parse(run({"chordal", "C30"}).out);
  EXPECT_FALSE(j["chordal"].get<bool>());
  EXPECT_GE(j["certificate"]["hole"].size(), 4u);
  j = json::parse(run({"chordal", "S6"}).out);
  EXPECT_FALSE(j["chordal"].get<bool>());
}

TEST(Cli, Census) {
  const auto r24 = run({"census", "--orders", "24..24", "--format", "json"});
  ASSERT_EQ(r24.code, 0);
  const auto j = json::parse(r24.out);
  EXPECT_EQ(j["censuses"][0]["rows"].size(), 15u);
  const auto r42 = json::parse(run({"census", "--orders", "42..42", "--format", "json"}).out);
  EXPECT_EQ(r42["censuses"][0]["rows"].size(), 6u);
  EXPECT_EQ(r42["censuses"][0]["non_chordal"], json::array({"C42"}));
  const auto table = run({"census", "--orders", "7..8"}).out;
  EXPECT_NE(table.find("chordal (p-group)"), std::string::npos);
}

TEST(Cli, Predicates) {
  EXPECT_EQ(run({"predicate", "psl2", "61"}).out, "false\n");
  EXPECT_EQ(run({"predicate", "dicyclic", "6"}).out, "true\n");
  EXPECT_EQ(run({"predicate", "suzuki", "8"}).out, "true\n");
  EXPECT_EQ(run({"predicate", "cyclic", "30"}).out, "false\n");
  EXPECT_EQ(run({"predicate", "dihedral", "15"}).out, "true\n");
}

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(run({"chordal", "C6 x S3"}).out, run({"chordal", "C6 x S3"}).out);
  EXPECT_EQ(run({"census", "--orders", "36..36"}).out, run({"census", "--orders", "36..36"}).out);
}

TEST(Cli, VerifyPublishedSuite) {
  const auto r = run({"verify", "--suite", "paper"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("M11: non-chordal, hole verified"), std::string::npos);
  EXPECT_NE(r.out.find("S6 12-cycle: induced"), std::string::npos);
  EXPECT_NE(r.out.find("order 36: order-36 theorem"), std::string::npos);
}

TEST(Cli, VerifyProperties) {
  const auto r = run({"verify", "--suite", "properties"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 violations"), std::string::npos);
}

TEST(Cli, CatalogExport) {
  const auto r = run({"catalog", "export"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["groups"].size(), catalog().size());
}
