// Builds a few groups, decides chordality of their power graphs and prints
// the certificate in terms of group elements.

#include <iostream>

#include <powerchord/powerchord.hpp>

int main() {
  using namespace powerchord;
  for (const char *spec : {"C12", "C30", "D15", "S5", "S6", "C6 x S3", "PSL(2,7)"}) {
    const FiniteGroup g = build(spec);
    const auto graph = power_graph(g);
    const auto cert = is_chordal(graph);
    std::cout << g.name() << " (order " << g.order() << ", " << graph.edge_count() << " edges): "
              << (cert.chordal() ? "chordal" : "non-chordal") << "\n  " << certificate_summary(graph, cert) << "\n";
  }
  const auto w = symmetric_12_cycle();
  std::cout << w.name << ": " << (w.induced ? "verified induced" : w.problem) << "\n";
}
