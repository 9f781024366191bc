#pragma once

/**
 * @file group_props.hpp
 * @brief Structural queries on a FiniteGroup: cyclic subgroups, exponent,
 *        centre, nilpotency, EPPO, the prime graph, Sylow data.
 *
 * Element sets are returned as sorted vectors of ids unless stated otherwise.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "error.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "ntheory.hpp"

namespace powerchord {

using ElementSet = std::vector<ElementId>;

/// {x^0, x^1, ..., x^(o-1)} in power order (not sorted).
inline std::vector<ElementId> cyclic_subgroup_powers(const FiniteGroup &g, ElementId x) {
  std::vector<ElementId> out{g.identity()};
  for (ElementId y = x; y != g.identity(); y = g.mul(y, x))
    out.push_back(y);
  return out;
}

/// <x> as a sorted id set.
inline ElementSet cyclic_subgroup(const FiniteGroup &g, ElementId x) {
  auto s = cyclic_subgroup_powers(g, x);
  std::sort(s.begin(), s.end());
  return s;
}

inline std::uint64_t exponent(const FiniteGroup &g) {
  std::uint64_t e = 1;
  for (auto o : g.element_orders())
    e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

inline std::uint64_t exponent_of(const FiniteGroup &g, const ElementSet &s) {
  std::uint64_t e = 1;
  for (auto x : s)
    e = std::lcm(e, g.element_order(x));
  return e;
}

inline bool is_abelian(const FiniteGroup &g) {
  const auto n = static_cast<ElementId>(g.order());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

inline bool is_cyclic(const FiniteGroup &g) {
  for (auto o : g.element_orders())
    if (o == g.order())
      return true;
  return false;
}

/// True when the subset contains an element whose order equals its size.
inline bool is_cyclic_set(const FiniteGroup &g, const ElementSet &s) {
  for (auto x : s)
    if (g.element_order(x) == s.size())
      return true;
  return false;
}

inline ElementSet center(const FiniteGroup &g) {
  const auto n = static_cast<ElementId>(g.order());
  ElementSet out;
  for (ElementId a = 0; a < n; ++a) {
    bool central = true;
    for (ElementId b = 0; b < n && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central)
      out.push_back(a);
  }
  return out;
}

/// Nilpotent iff every two elements of coprime order commute.
inline bool is_nilpotent(const FiniteGroup &g) {
  const auto n = static_cast<ElementId>(g.order());
  const auto &ord = g.element_orders();
  for (ElementId a = 1; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (std::gcd(ord[a], ord[b]) == 1 && g.mul(a, b) != g.mul(b, a))
        return false;
  return true;
}

/// Every non-identity element has prime-power order.
inline bool is_eppo(const FiniteGroup &g) {
  for (std::size_t a = 1; a < g.order(); ++a)
    if (!ntheory::is_prime_power(g.element_orders()[a]))
      return false;
  return true;
}

inline std::map<std::uint64_t, std::uint64_t> order_class_counts(const FiniteGroup &g) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (auto o : g.element_orders())
    ++out[o];
  return out;
}

/// Distinct primes dividing |G|, increasing.
inline std::vector<std::uint64_t> order_primes(const FiniteGroup &g) { return ntheory::factorize(g.order()).primes(); }

/**
 * Gruenberg-Kegel graph: vertex i is the i-th prime dividing |G| (labels carry
 * the primes); p ~ q iff some element has order p*q.
 */
inline UndirectedGraph prime_graph(const FiniteGroup &g) {
  const auto primes = order_primes(g);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < primes.size(); ++i)
    for (Vertex j = i + 1; j < primes.size(); ++j) {
      const std::uint64_t pq = primes[i] * primes[j];
      for (auto o : g.element_orders())
        if (o == pq) {
          edges.emplace_back(i, j);
          break;
        }
    }
  UndirectedGraph out(primes.size(), std::move(edges));
  std::vector<std::string> labels;
  for (auto p : primes)
    labels.push_back(std::to_string(p));
  out.set_labels(std::move(labels));
  return out;
}

/**
 * All maximal cyclic subgroups, deduplicated, each as a sorted id set. The
 * list is ordered by the smallest generator id of each subgroup.
 */
inline std::vector<ElementSet> maximal_cyclic_subgroups(const FiniteGroup &g) {
  const std::size_t n = g.order();
  const auto &ord = g.element_orders();
  std::vector<bool> dominated(n, false);
  for (ElementId h = 0; h < n; ++h)
    for (ElementId y = h; y != g.identity(); y = g.mul(y, h))
      if (ord[y] < ord[h])
        dominated[y] = true;
  dominated[0] = n > 1;
  std::vector<bool> taken(n, false);
  std::vector<ElementSet> out;
  for (ElementId x = 0; x < n; ++x) {
    if (dominated[x] || taken[x])
      continue;
    auto powers = cyclic_subgroup_powers(g, x);
    const std::uint64_t o = ord[x];
    for (std::uint64_t k = 1; k < o; ++k)
      if (std::gcd(k, o) == 1)
        taken[powers[k]] = true;
    taken[x] = true;
    std::sort(powers.begin(), powers.end());
    out.push_back(std::move(powers));
  }
  return out;
}

/// No non-identity element lies in two of the given subgroups.
inline bool pairwise_trivial_intersection(const std::vector<ElementSet> &subgroups) {
  std::vector<ElementId> seen;
  for (const auto &s : subgroups)
    for (auto x : s)
      if (x != 0)
        seen.push_back(x);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

/// Subgroup generated by `gens`, as a sorted id set.
inline ElementSet subgroup_closure(const FiniteGroup &g, const std::vector<ElementId> &gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<ElementId> elems{g.identity()};
  in[0] = true;
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (auto s : gens) {
      const auto y = g.mul(elems[head], s);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

inline bool contains(const ElementSet &s, ElementId x) { return std::binary_search(s.begin(), s.end(), x); }

/// g^-1 S g as a sorted set.
inline ElementSet conjugate_set(const FiniteGroup &g, const ElementSet &s, ElementId by) {
  ElementSet out;
  out.reserve(s.size());
  for (auto x : s)
    out.push_back(g.conjugate(x, by));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_normal(const FiniteGroup &g, const ElementSet &s) {
  for (ElementId by = 0; by < g.order(); ++by)
    for (auto x : s)
      if (!contains(s, g.conjugate(x, by)))
        return false;
  return true;
}

namespace detail {
inline std::uint64_t prime_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline bool normalizes(const FiniteGroup &g, const ElementSet &s, ElementId by) {
  for (auto x : s)
    if (!contains(s, g.conjugate(x, by)))
      return false;
  return true;
}
} // namespace detail

/**
 * A Sylow p-subgroup. Starting from the trivial subgroup, a p-subgroup S is
 * extended by the first element g (by id) that normalizes S, lies outside S
 * and has g^p in S, until |S| is the full p-part of |G|.
 */
inline ElementSet sylow_subgroup(const FiniteGroup &g, std::uint64_t p) {
  if (!ntheory::is_prime(p) || g.order() % p != 0)
    throw InvalidInput("sylow_subgroup: " + std::to_string(p) + " is not a prime divisor of the group order");
  const std::uint64_t target = detail::prime_part(g.order(), p);
  const auto &ord = g.element_orders();
  ElementSet s{g.identity()};
  while (s.size() < target) {
    bool grown = false;
    for (ElementId x = 1; x < g.order() && !grown; ++x) {
      if (detail::prime_part(ord[x], p) != ord[x] || contains(s, x))
        continue;
      if (!contains(s, g.pow(x, static_cast<std::int64_t>(p))) || !detail::normalizes(g, s, x))
        continue;
      ElementSet next;
      next.reserve(s.size() * p);
      ElementId xi = g.identity();
      for (std::uint64_t i = 0; i < p; ++i) {
        for (auto y : s)
          next.push_back(g.mul(xi, y));
        xi = g.mul(xi, x);
      }
      std::sort(next.begin(), next.end());
      s = std::move(next);
      grown = true;
    }
    if (!grown)
      throw InternalError("sylow_subgroup: no extending element found");
  }
  return s;
}

/// O_p(G): intersection of all conjugates of a Sylow p-subgroup.
inline ElementSet largest_normal_p_subgroup(const FiniteGroup &g, std::uint64_t p) {
  ElementSet core = sylow_subgroup(g, p);
  for (ElementId by = 1; by < g.order() && core.size() > 1; ++by) {
    const auto conj = conjugate_set(g, core, by);
    ElementSet meet;
    std::set_intersection(core.begin(), core.end(), conj.begin(), conj.end(), std::back_inserter(meet));
    core = std::move(meet);
  }
  return core;
}

/// Every Sylow subgroup is normal (computed subgroup by subgroup).
inline bool all_sylows_normal(const FiniteGroup &g) {
  for (auto p : order_primes(g))
    if (!is_normal(g, sylow_subgroup(g, p)))
      return false;
  return true;
}

inline std::size_t conjugacy_class_count(const FiniteGroup &g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::size_t classes = 0;
  for (ElementId x = 0; x < n; ++x) {
    if (seen[x])
      continue;
    ++classes;
    for (ElementId by = 0; by < n; ++by)
      seen[g.conjugate(x, by)] = true;
  }
  return classes;
}

} // namespace powerchord
