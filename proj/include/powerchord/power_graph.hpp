#pragma once

/**
 * @file power_graph.hpp
 * @brief Directed, undirected, proper and enhanced power graphs.
 *
 * Vertex v of a power graph is element id v of the group. The proper power
 * graph drops the identity, so its vertex v is element v + 1. Vertex labels
 * carry the element labels of the group.
 */

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "group.hpp"
#include "group_props.hpp"
#include "ntheory.hpp"

namespace powerchord {

namespace detail {
inline std::vector<std::string> element_labels(const FiniteGroup &g, ElementId first = 0) {
  std::vector<std::string> out;
  out.reserve(g.order() - first);
  for (ElementId a = first; a < g.order(); ++a)
    out.push_back(g.label(a));
  return out;
}
} // namespace detail

/// Arc a -> b iff a != b and b lies in <a>.
inline Digraph directed_power_graph(const FiniteGroup &g) {
  std::vector<Edge> arcs;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId y = g.mul(a, a); ; y = g.mul(y, a)) {
      // powers a^2, a^3, ..., a^o = e; a^1 = a is skipped
      if (y != a)
        arcs.emplace_back(a, y);
      if (y == g.identity())
        break;
    }
  Digraph out(g.order(), std::move(arcs));
  out.set_labels(detail::element_labels(g));
  return out;
}

/// Edge {a, b} iff a != b and one is a power of the other.
inline UndirectedGraph power_graph(const FiniteGroup &g) {
  std::vector<Edge> edges;
  for (ElementId a = 0; a < g.order(); ++a)
    for (ElementId y = g.mul(a, a); y != a; y = g.mul(y, a))
      edges.emplace_back(std::min(a, y), std::max(a, y));
  UndirectedGraph out(g.order(), std::move(edges));
  out.set_labels(detail::element_labels(g));
  return out;
}

/// Power graph minus the identity; vertex v is element v + 1.
inline UndirectedGraph proper_power_graph(const FiniteGroup &g) {
  std::vector<Edge> edges;
  for (ElementId a = 1; a < g.order(); ++a)
    for (ElementId y = g.mul(a, a); y != a; y = g.mul(y, a))
      if (y != g.identity())
        edges.emplace_back(std::min(a, y) - 1, std::max(a, y) - 1);
  UndirectedGraph out(g.order() - 1, std::move(edges));
  out.set_labels(detail::element_labels(g, 1));
  return out;
}

/// Edge {a, b} iff a and b lie in a common cyclic subgroup.
inline UndirectedGraph enhanced_power_graph(const FiniteGroup &g) {
  std::vector<Edge> edges;
  for (const auto &m : maximal_cyclic_subgroups(g))
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        edges.emplace_back(m[i], m[j]);
  UndirectedGraph out(g.order(), std::move(edges));
  out.set_labels(detail::element_labels(g));
  return out;
}

/// (1/2) * sum over a of (2 o(a) - phi(o(a)) - 1).
inline std::uint64_t edge_count_formula(const FiniteGroup &g) {
  std::uint64_t twice = 0;
  for (auto o : g.element_orders())
    twice += 2 * static_cast<std::uint64_t>(o) - ntheory::euler_totient(o) - 1;
  if (twice % 2 != 0)
    throw InternalError("edge count sum is odd");
  return twice / 2;
}

} // namespace powerchord
