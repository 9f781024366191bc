#include <gtest/gtest.h>

#include <sstream>

#include <powerchord/io.hpp>

using namespace powerchord;

TEST(Io, EdgeListIsSortedAndTerminated) {
  const auto text = to_edge_list(power_graph(cyclic(6)));
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  std::istringstream in(text);
  std::vector<Edge> edges;
  Vertex u, v;
  while (in >> u >> v) {
    EXPECT_LT(u, v);
    edges.emplace_back(u, v);
  }
  EXPECT_EQ(edges.size(), 13u);
  EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}

TEST(Io, DotRoundTripsVertexCount) {
  for (const char *spec : {"C1", "C6", "S3", "D5", "A4"}) {
    const auto g = power_graph(build(spec));
    const auto dot = to_dot(g);
    EXPECT_EQ(dot.rfind("graph {", 0), 0u);
    EXPECT_EQ(dot_vertex_count(dot), g.vertex_count()) << spec;
  }
  EXPECT_EQ(to_dot(directed_power_graph(cyclic(3))).rfind("digraph {", 0), 0u);
}

TEST(Io, GraphJson) {
  const auto j = graph_json(proper_power_graph(dihedral(5)));
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["edges"].size(), 6u);
  EXPECT_EQ(j["labels"].size(), 9u);
}

TEST(Io, CertificateJson) {
  const auto chordal = power_graph(cyclic(12));
  const auto c = chordality_json("C12", chordal, is_chordal(chordal));
  EXPECT_EQ(c["schema_version"], 1);
  EXPECT_TRUE(c["chordal"].get<bool>());
  EXPECT_EQ(c["certificate"]["peo"].size(), 12u);

  const auto holed = power_graph(cyclic(30));
  const auto h = chordality_json("C30", holed, is_chordal(holed));
  EXPECT_FALSE(h["chordal"].get<bool>());
  const auto hole = h["certificate"]["hole"].get<std::vector<Vertex>>();
  EXPECT_TRUE(verify_induced_cycle(holed, hole));
  EXPECT_EQ(h["certificate"]["hole_elements"].size(), hole.size());
}

TEST(Io, CensusTableAndJson) {
  const auto rep = census(30);
  const auto table = census_table(rep);
  EXPECT_NE(table.find("name"), std::string::npos);
  EXPECT_NE(table.find("certificate"), std::string::npos);
  EXPECT_NE(table.find("C30"), std::string::npos);
  const auto j = census_json(std::vector<CensusReport>{rep});
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["censuses"][0]["rows"].size(), 4u);
  EXPECT_EQ(j["censuses"][0]["non_chordal"], json::array({"C30"}));
}

TEST(Io, CensusIndependentOfThreadCount) {
  EXPECT_EQ(census_json(std::vector<CensusReport>{census(36, 1)}).dump(),
            census_json(std::vector<CensusReport>{census(36, 4)}).dump());
}

TEST(Io, CatalogJson) {
  const auto j = catalog_json();
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["groups"].size(), catalog().size());
  EXPECT_TRUE(j["groups"][0].contains("fingerprint"));
}
