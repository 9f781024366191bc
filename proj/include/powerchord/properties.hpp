#pragma once

/**
 * @file properties.hpp
 * @brief Structural invariants of power graphs, checked group by group.
 *
 * For every group in the suite:
 *  - the closed-form edge count equals the counted edges;
 *  - every degree is even iff the group order is odd;
 *  - EPPO iff the prime graph is edgeless iff power graph = enhanced power graph;
 *  - the identity is adjacent to every other vertex;
 *  - P(G) is chordal iff the proper power graph P*(G) is chordal.
 */

#include <string>
#include <vector>

#include "catalog.hpp"
#include "census.hpp"
#include "chordality.hpp"
#include "group_props.hpp"
#include "power_graph.hpp"

namespace powerchord {

struct PropertyViolation {
  std::string group;
  std::string property;
  std::string detail;
};

struct PropertyReport {
  std::size_t groups = 0;
  std::size_t checks = 0;
  std::vector<PropertyViolation> violations;

  bool ok() const { return violations.empty(); }
  void merge(const PropertyReport &o) {
    groups += o.groups;
    checks += o.checks;
    violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  }
};

/// Spec texts of the property suite: the catalog, S3..S6, A4..A7 and PSL(2,q) for q in {4,5,7,8,9,11,13}.
inline std::vector<std::string> property_suite_specs() {
  std::vector<std::string> out;
  for (const auto &e : catalog())
    out.push_back(e.spec_text());
  for (int n = 3; n <= 6; ++n)
    out.push_back("S" + std::to_string(n));
  for (int n = 4; n <= 7; ++n)
    out.push_back("A" + std::to_string(n));
  for (int q : {4, 5, 7, 8, 9, 11, 13})
    out.push_back("PSL(2," + std::to_string(q) + ")");
  return out;
}

inline PropertyReport check_properties(const FiniteGroup &g) {
  PropertyReport r;
  r.groups = 1;
  const auto fail = [&](std::string prop, std::string detail) {
    r.violations.push_back({g.name(), std::move(prop), std::move(detail)});
  };
  const auto pg = power_graph(g);
  const std::size_t n = g.order();

  ++r.checks;
  const auto formula = edge_count_formula(g);
  if (formula != pg.edge_count())
    fail("edge count", "formula " + std::to_string(formula) + ", counted " + std::to_string(pg.edge_count()));

  ++r.checks;
  bool all_even = true;
  for (Vertex v = 0; v < n; ++v)
    all_even = all_even && pg.degree(v) % 2 == 0;
  if (all_even != (n % 2 == 1))
    fail("even degrees iff odd order", std::string("all degrees even: ") + (all_even ? "yes" : "no"));

  ++r.checks;
  const bool eppo = is_eppo(g);
  const bool gk_edgeless = prime_graph(g).edge_count() == 0;
  const bool same_as_enhanced = enhanced_power_graph(g) == pg;
  if (eppo != gk_edgeless || eppo != same_as_enhanced)
    fail("EPPO equivalences", std::string("eppo ") + (eppo ? "1" : "0") + ", prime graph edgeless " +
                                  (gk_edgeless ? "1" : "0") + ", P = enhanced " + (same_as_enhanced ? "1" : "0"));

  ++r.checks;
  if (n > 1 && pg.degree(0) != n - 1)
    fail("identity dominating", "identity degree " + std::to_string(pg.degree(0)));

  ++r.checks;
  const bool full = is_chordal(pg).chordal();
  const bool proper = n > 1 ? is_chordal(proper_power_graph(g)).chordal() : true;
  if (full != proper)
    fail("P chordal iff P* chordal", std::string("P ") + (full ? "chordal" : "non-chordal") + ", P* " +
                                         (proper ? "chordal" : "non-chordal"));
  return r;
}

inline PropertyReport property_suite(unsigned threads = default_thread_count()) {
  const auto specs = property_suite_specs();
  std::vector<PropertyReport> parts(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) { parts[i] = check_properties(build(specs[i])); });
  PropertyReport out;
  for (const auto &p : parts)
    out.merge(p);
  return out;
}

} // namespace powerchord
