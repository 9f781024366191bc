#include <gtest/gtest.h>

#include <random>

#include <powerchord/catalog.hpp>
#include <powerchord/chordality.hpp>
#include <powerchord/power_graph.hpp>
#include <powerchord/properties.hpp>

using namespace powerchord;

namespace {

UndirectedGraph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return UndirectedGraph(n, edges);
}

UndirectedGraph random_graph(std::mt19937_64 &rng) {
  const std::size_t n = 1 + rng() % 40;
  const unsigned density = 1 + rng() % 9;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng() % 10 < density)
        edges.emplace_back(u, v);
  return UndirectedGraph(n, edges);
}

/// Random chordal graph: each new vertex joins a clique of earlier vertices.
UndirectedGraph random_chordal_graph(std::mt19937_64 &rng) {
  const std::size_t n = 2 + rng() % 39;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 1; v < n; ++v) {
    const Vertex anchor = static_cast<Vertex>(rng() % v);
    std::vector<Vertex> clique{anchor};
    for (Vertex u : nbrs[anchor])
      if (rng() % 2)
        clique.push_back(u);
    std::vector<Vertex> kept;
    for (Vertex u : clique) {
      bool ok = true;
      for (Vertex w : kept)
        ok = ok && std::find(nbrs[u].begin(), nbrs[u].end(), w) != nbrs[u].end();
      if (ok)
        kept.push_back(u);
    }
    for (Vertex u : kept) {
      edges.emplace_back(u, v);
      nbrs[u].push_back(v);
      nbrs[v].push_back(u);
    }
  }
  return UndirectedGraph(n, edges);
}

void expect_consistent(const UndirectedGraph &g) {
  const auto cert = is_chordal(g);
  EXPECT_TRUE(cert.verify(g));
  EXPECT_EQ(cert.chordal(), elimination_oracle(g));
  if (cert.chordal() && !g.is_complete())
    EXPECT_TRUE(has_two_nonadjacent_simplicial(g));
  if (!cert.chordal())
    EXPECT_GE(cert.hole().size(), 4u);
}

} // namespace

TEST(Chordality, CyclesAreHoles) {
  EXPECT_TRUE(is_chordal(cycle_graph(3)).chordal());
  for (std::size_t n = 4; n <= 12; ++n) {
    const auto g = cycle_graph(n);
    const auto cert = is_chordal(g);
    ASSERT_FALSE(cert.chordal());
    EXPECT_EQ(cert.hole().size(), n);
    EXPECT_TRUE(verify_induced_cycle(g, cert.hole()));
  }
}

TEST(Chordality, EmptyAndTrivialGraphs) {
  EXPECT_TRUE(is_chordal(UndirectedGraph(0, {})).chordal());
  EXPECT_TRUE(is_chordal(UndirectedGraph(1, {})).chordal());
  EXPECT_TRUE(is_chordal(UndirectedGraph(5, {})).chordal());
}

TEST(Chordality, InducedCycleVerifier) {
  const auto c5 = cycle_graph(5);
  EXPECT_TRUE(verify_induced_cycle(c5, {0, 1, 2, 3, 4}));
  EXPECT_FALSE(verify_induced_cycle(c5, {0, 1, 2}));
  EXPECT_FALSE(verify_induced_cycle(c5, {0, 1, 2, 3}));
  const UndirectedGraph chorded(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_FALSE(verify_induced_cycle(chorded, {0, 1, 2, 3}));
}

TEST(Chordality, PeoVerifier) {
  const UndirectedGraph path(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(verify_peo(path, {0, 1, 2}));
  EXPECT_FALSE(verify_peo(path, {1, 0, 2}));
}

TEST(Chordality, LexBfsVisitsEveryVertexOnce) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_graph(rng);
    auto order = lexbfs(g);
    std::sort(order.begin(), order.end());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      EXPECT_EQ(order[v], v);
  }
}

TEST(Chordality, ThousandRandomGraphsAgreeWithEliminationOracle) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i)
    expect_consistent(random_graph(rng));
}

TEST(Chordality, RandomChordalGraphsAreRecognized) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const auto g = random_chordal_graph(rng);
    EXPECT_TRUE(is_chordal(g).chordal());
    expect_consistent(g);
  }
}

TEST(Chordality, SuiteGraphsUpTo200AgreeWithEliminationOracle) {
  for (const auto &spec : property_suite_specs()) {
    const auto g = build(spec);
    if (g.order() > 200)
      continue;
    expect_consistent(power_graph(g));
    if (g.order() > 1)
      expect_consistent(proper_power_graph(g));
  }
}

TEST(Chordality, CertificatesAreDeterministic) {
  const auto g = power_graph(build("C30"));
  const auto a = is_chordal(g), b = is_chordal(g);
  EXPECT_EQ(a.hole(), b.hole());
}
