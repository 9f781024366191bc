#pragma once

/**
 * @file chordality.hpp
 * @brief Certifying chordality: LexBFS, perfect elimination orderings, hole
 *        extraction and an independent simplicial-elimination oracle.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace powerchord {

/// Position -> vertex.
using Ordering = std::vector<Vertex>;

/**
 * Lexicographic breadth-first search by partition refinement. Ties are broken
 * by smallest vertex id; `start` is visited first.
 */
inline Ordering lexbfs(const UndirectedGraph &g, Vertex start = 0) {
  const std::size_t n = g.vertex_count();
  if (n == 0)
    return {};
  if (start >= n)
    throw InvalidInput("lexbfs: start vertex out of range");

  constexpr std::int64_t none = -1;
  struct Cell {
    std::int64_t prev = none, next = none; // neighbouring classes
    std::int64_t head = none, tail = none; // member list
    std::size_t size = 0;
    std::uint64_t stamp = 0;
    std::int64_t split = none;
  };
  std::vector<Cell> cells;
  cells.reserve(n + 1);
  std::vector<std::int64_t> cls(n), vprev(n, none), vnext(n, none);
  std::vector<bool> visited(n, false);

  cells.push_back({});
  std::int64_t first = 0;
  for (Vertex v = 0; v < n; ++v) {
    cls[v] = 0;
    vprev[v] = cells[0].tail;
    if (cells[0].tail != none)
      vnext[cells[0].tail] = v;
    else
      cells[0].head = v;
    cells[0].tail = v;
    ++cells[0].size;
  }

  auto unlink_vertex = [&](Vertex v) {
    Cell &c = cells[cls[v]];
    if (vprev[v] != none)
      vnext[vprev[v]] = vnext[v];
    else
      c.head = vnext[v];
    if (vnext[v] != none)
      vprev[vnext[v]] = vprev[v];
    else
      c.tail = vprev[v];
    vprev[v] = vnext[v] = none;
    --c.size;
  };
  auto unlink_cell_if_empty = [&](std::int64_t ci) {
    Cell &c = cells[ci];
    if (c.size != 0)
      return;
    if (c.prev != none)
      cells[c.prev].next = c.next;
    else
      first = c.next;
    if (c.next != none)
      cells[c.next].prev = c.prev;
  };
  auto append = [&](std::int64_t ci, Vertex v) {
    Cell &c = cells[ci];
    cls[v] = ci;
    vprev[v] = c.tail;
    vnext[v] = none;
    if (c.tail != none)
      vnext[c.tail] = v;
    else
      c.head = v;
    c.tail = v;
    ++c.size;
  };

  Ordering order;
  order.reserve(n);
  for (std::uint64_t round = 1; round <= n; ++round) {
    Vertex v;
    if (round == 1) {
      v = start;
    } else {
      v = static_cast<Vertex>(cells[first].head);
    }
    const std::int64_t vc = cls[v];
    unlink_vertex(v);
    unlink_cell_if_empty(vc);
    visited[v] = true;
    order.push_back(v);

    for (Vertex w : g.neighbors(v)) {
      if (visited[w])
        continue;
      const std::int64_t ci = cls[w];
      if (cells[ci].stamp != round) {
        cells[ci].stamp = round;
        Cell fresh;
        fresh.stamp = round;
        const auto ni = static_cast<std::int64_t>(cells.size());
        cells.push_back(fresh);
        Cell &c = cells[ci];
        Cell &nc = cells[ni];
        nc.prev = c.prev;
        nc.next = ci;
        if (c.prev != none)
          cells[c.prev].next = ni;
        else
          first = ni;
        c.prev = ni;
        c.split = ni;
      }
      const std::int64_t target = cells[ci].split;
      unlink_vertex(w);
      append(target, w);
      unlink_cell_if_empty(ci);
    }
  }
  return order;
}

/// A violation of the elimination condition: p is v's earliest later neighbour,
/// w is another later neighbour of v not adjacent to p.
struct PeoViolation {
  Vertex v, p, w;
};

inline std::vector<std::size_t> ordering_positions(const Ordering &ord, std::size_t n) {
  if (ord.size() != n)
    throw InvalidInput("ordering length does not match vertex count");
  std::vector<std::size_t> pos(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (ord[i] >= n || pos[ord[i]] != n)
      throw InvalidInput("ordering is not a permutation of the vertices");
    pos[ord[i]] = i;
  }
  return pos;
}

/// First failure of the parent/subset test scanning positions left to right.
inline std::optional<PeoViolation> find_peo_violation(const UndirectedGraph &g, const Ordering &ord) {
  const std::size_t n = g.vertex_count();
  const auto pos = ordering_positions(ord, n);
  for (Vertex v : ord) {
    std::optional<Vertex> parent;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v] && (!parent || pos[u] < pos[*parent]))
        parent = u;
    if (!parent)
      continue;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v] && u != *parent && !g.adjacent(u, *parent))
        return PeoViolation{v, *parent, u};
  }
  return std::nullopt;
}

/// Every vertex is simplicial among itself and its successors.
inline bool verify_peo(const UndirectedGraph &g, const Ordering &ord) { return !find_peo_violation(g, ord); }

/// At least 4 distinct vertices, consecutive ones adjacent, all others not.
inline bool verify_induced_cycle(const UndirectedGraph &g, const std::vector<Vertex> &cycle) {
  const std::size_t k = cycle.size();
  if (k < 4)
    return false;
  for (Vertex v : cycle)
    if (v >= g.vertex_count())
      return false;
  auto sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive)
        return false;
    }
  return true;
}

namespace detail {

/// Shortest p-w path avoiding `blocked`; empty if none.
inline std::vector<Vertex> shortest_path(const UndirectedGraph &g, Vertex p, Vertex w, const std::vector<bool> &blocked) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> parent(n, -2);
  std::queue<Vertex> q;
  parent[p] = -1;
  q.push(p);
  while (!q.empty()) {
    const Vertex x = q.front();
    q.pop();
    if (x == w)
      break;
    for (Vertex y : g.neighbors(x))
      if (!blocked[y] && parent[y] == -2) {
        parent[y] = x;
        q.push(y);
      }
  }
  if (parent[w] == -2)
    return {};
  std::vector<Vertex> path;
  for (std::int64_t x = w; x != -1; x = parent[x])
    path.push_back(static_cast<Vertex>(x));
  std::reverse(path.begin(), path.end());
  return path;
}

/// Cycle v, p, ..., w through the complement of N[v] \ {p, w}, or empty.
inline std::vector<Vertex> hole_through(const UndirectedGraph &g, Vertex v, Vertex p, Vertex w) {
  std::vector<bool> blocked(g.vertex_count(), false);
  blocked[v] = true;
  for (Vertex u : g.neighbors(v))
    blocked[u] = true;
  blocked[p] = blocked[w] = false;
  auto path = shortest_path(g, p, w, blocked);
  if (path.empty())
    return {};
  std::vector<Vertex> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

/**
 * Exhaustive search: for each v, the components of G - N[v]; two non-adjacent
 * neighbours of v attached to the same component close a hole through v.
 */
inline std::vector<Vertex> scan_for_hole(const UndirectedGraph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::int64_t> comp(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> closed(n, false);
    closed[v] = true;
    for (Vertex u : g.neighbors(v))
      closed[u] = true;
    std::fill(comp.begin(), comp.end(), -1);
    std::int64_t next = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (closed[s] || comp[s] != -1)
        continue;
      std::vector<Vertex> stack{s};
      comp[s] = next;
      while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
          if (!closed[y] && comp[y] == -1) {
            comp[y] = next;
            stack.push_back(y);
          }
      }
      ++next;
    }
    std::vector<std::vector<Vertex>> attached(static_cast<std::size_t>(next));
    for (Vertex u : g.neighbors(v)) {
      std::vector<bool> mark(static_cast<std::size_t>(next), false);
      for (Vertex y : g.neighbors(u))
        if (!closed[y] && !mark[comp[y]]) {
          mark[comp[y]] = true;
          attached[comp[y]].push_back(u);
        }
    }
    for (const auto &list : attached)
      for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
          if (!g.adjacent(list[i], list[j])) {
            auto cycle = hole_through(g, v, list[i], list[j]);
            if (!cycle.empty())
              return cycle;
          }
  }
  return {};
}

} // namespace detail

/// Rotate so the smallest vertex leads, then orient towards its smaller neighbour.
inline std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  if (cycle.size() < 3)
    return cycle;
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  if (cycle.back() < cycle[1])
    std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

/**
 * Induced cycle of length >= 4 from a PEO violation: v, p, then a shortest
 * path to w avoiding every other neighbour of v. Falls back to an exhaustive
 * scan when p and w are not joined outside N[v]. The cycle is returned in
 * canonical rotation. Throws InternalError if no verified hole is found.
 */
inline std::vector<Vertex> find_hole(const UndirectedGraph &g, const PeoViolation &witness) {
  auto cycle = detail::hole_through(g, witness.v, witness.p, witness.w);
  if (cycle.empty())
    cycle = detail::scan_for_hole(g);
  if (cycle.empty() || !verify_induced_cycle(g, cycle))
    throw InternalError("hole extraction failed");
  return canonical_cycle(std::move(cycle));
}

class ChordalityCertificate {
public:
  static ChordalityCertificate from_peo(Ordering peo) {
    ChordalityCertificate c;
    c.chordal_ = true;
    c.vertices_ = std::move(peo);
    return c;
  }
  static ChordalityCertificate from_hole(std::vector<Vertex> hole) {
    ChordalityCertificate c;
    c.chordal_ = false;
    c.vertices_ = std::move(hole);
    return c;
  }

  bool chordal() const { return chordal_; }

  const Ordering &peo() const {
    if (!chordal_)
      throw InvalidInput("certificate holds a hole, not a PEO");
    return vertices_;
  }
  const std::vector<Vertex> &hole() const {
    if (chordal_)
      throw InvalidInput("certificate holds a PEO, not a hole");
    return vertices_;
  }

  /// Re-check against the graph.
  bool verify(const UndirectedGraph &g) const {
    return chordal_ ? verify_peo(g, vertices_) : verify_induced_cycle(g, vertices_);
  }

private:
  bool chordal_ = true;
  std::vector<Vertex> vertices_;
};

/**
 * Reverse LexBFS order from vertex 0; a PEO certificate if it passes
 * verification, otherwise a hole extracted from the first violation. The
 * certificate is verified before it is returned.
 */
inline ChordalityCertificate is_chordal(const UndirectedGraph &g) {
  if (g.vertex_count() == 0)
    return ChordalityCertificate::from_peo({});
  Ordering peo = lexbfs(g, 0);
  std::reverse(peo.begin(), peo.end());
  auto bad = find_peo_violation(g, peo);
  auto cert = bad ? ChordalityCertificate::from_hole(find_hole(g, *bad)) : ChordalityCertificate::from_peo(std::move(peo));
  if (!cert.verify(g))
    throw InternalError("chordality certificate failed verification");
  return cert;
}

inline bool is_simplicial(const UndirectedGraph &g, Vertex v) {
  const auto &nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j]))
        return false;
  return true;
}

/// Vertices whose closed neighbourhood is a clique, increasing.
inline std::vector<Vertex> simplicial_vertices(const UndirectedGraph &g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (is_simplicial(g, v))
      out.push_back(v);
  return out;
}

/**
 * Repeatedly delete the smallest-id simplicial vertex; true iff the graph
 * empties. Independent of the LexBFS engine.
 */
inline bool elimination_oracle(const UndirectedGraph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  auto simplicial_now = [&](Vertex v) {
    std::vector<Vertex> nb;
    for (Vertex u : g.neighbors(v))
      if (alive[u])
        nb.push_back(u);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!g.adjacent(nb[i], nb[j]))
          return false;
    return true;
  };
  std::set<Vertex> ready;
  for (Vertex v = 0; v < n; ++v)
    if (simplicial_now(v))
      ready.insert(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    const Vertex v = *ready.begin();
    ready.erase(ready.begin());
    alive[v] = false;
    ++removed;
    for (Vertex u : g.neighbors(v))
      if (alive[u] && !ready.count(u) && simplicial_now(u))
        ready.insert(u);
  }
  return removed == n;
}

/// Some pair of simplicial vertices is non-adjacent.
inline bool has_two_nonadjacent_simplicial(const UndirectedGraph &g) {
  const auto s = simplicial_vertices(g);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j]))
        return true;
  return false;
}

} // namespace powerchord
