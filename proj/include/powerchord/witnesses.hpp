#pragma once

/**
 * @file witnesses.hpp
 * @brief Published explicit cycles and orderings, instantiated in concrete
 *        groups and checked against the power graph.
 *
 * A fixture records the cycle exactly as written (element words), resolves
 * each word to an element id, and checks that the result is an induced cycle
 * of length at least 4. When a published cycle fails, the fixture records the
 * reason and substitutes a computed hole if the group has one.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "chordality.hpp"
#include "group.hpp"
#include "group_props.hpp"
#include "power_graph.hpp"

namespace powerchord {

/// a ~ b in P(G): distinct and one lies in the cyclic subgroup of the other.
inline bool power_adjacent(const FiniteGroup &g, ElementId a, ElementId b) {
  if (a == b)
    return false;
  const auto in = [&](ElementId x, ElementId y) {
    for (ElementId z = x;; z = g.mul(z, x)) {
      if (z == y)
        return true;
      if (z == g.identity())
        return false;
    }
  };
  return in(a, b) || in(b, a);
}

/**
 * Checks that `cycle` is an induced cycle of length >= 4 in P(G) directly on
 * the group, without building the graph. Returns the first problem found.
 */
inline std::optional<std::string> induced_cycle_problem(const FiniteGroup &g, const std::vector<ElementId> &cycle) {
  const std::size_t k = cycle.size();
  if (k < 4)
    return "cycle has length " + std::to_string(k) + " < 4";
  auto sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return std::string("cycle repeats an element");
  for (std::size_t i = 0; i < k; ++i) {
    const ElementId a = cycle[i], b = cycle[(i + 1) % k];
    if (!power_adjacent(g, a, b))
      return "consecutive elements " + g.label(a) + " and " + g.label(b) + " are not adjacent";
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1)
        continue;
      if (power_adjacent(g, cycle[i], cycle[j]))
        return "chord between " + g.label(cycle[i]) + " and " + g.label(cycle[j]);
    }
  return std::nullopt;
}

/// Element whose label is exactly `text`; throws InvalidInput if none.
inline ElementId element_by_label(const FiniteGroup &g, const std::string &text) {
  for (ElementId x = 0; x < g.order(); ++x)
    if (g.label(x) == text)
      return x;
  throw InvalidInput("no element labelled " + text + " in " + g.name());
}

/// Element of a permutation group given in 1-based cycle notation.
inline std::optional<ElementId> permutation_element(const FiniteGroup &g, const std::string &cycles) {
  const auto *pb = dynamic_cast<const PermutationBackend *>(&g.backend());
  if (!pb)
    throw InvalidInput(g.name() + " is not a permutation group");
  return pb->find(Permutation::parse(cycles, pb->degree(), 1));
}

struct WitnessCycle {
  std::string name;
  std::string group;              // spec text of the ambient group
  std::vector<std::string> words; // the cycle as published
  std::vector<ElementId> elements;
  bool resolved = false;          // every word names an element of the group
  bool induced = false;           // published cycle verified induced
  std::string problem;            // why it failed, empty on success
  std::vector<ElementId> substitute; // computed hole when the published cycle fails
  bool substitute_verified = false;
  bool group_chordal = false;     // computed verdict for the ambient group

  /// The fixture demonstrates non-chordality, by the published or a substitute cycle.
  bool establishes_hole() const { return induced || substitute_verified; }
};

namespace detail {

inline void finish_witness(WitnessCycle &w, const FiniteGroup &g) {
  if (w.resolved) {
    auto problem = induced_cycle_problem(g, w.elements);
    w.induced = !problem;
    w.problem = problem.value_or("");
  }
  if (!w.induced) {
    const auto graph = power_graph(g);
    const auto cert = is_chordal(graph);
    w.group_chordal = cert.chordal();
    if (!cert.chordal()) {
      w.substitute = cert.hole();
      w.substitute_verified = verify_induced_cycle(graph, w.substitute) && !induced_cycle_problem(g, w.substitute);
    }
  }
}

inline WitnessCycle permutation_witness(std::string name, std::string group, std::vector<std::string> words) {
  WitnessCycle w;
  w.name = std::move(name);
  w.group = std::move(group);
  w.words = std::move(words);
  const FiniteGroup g = build(w.group);
  w.resolved = true;
  std::vector<std::string> missing;
  for (const auto &word : w.words) {
    if (auto id = permutation_element(g, word))
      w.elements.push_back(*id);
    else
      missing.push_back(word);
  }
  if (!missing.empty()) {
    w.resolved = false;
    w.elements.clear();
    w.problem = "not elements of " + w.group + ":";
    for (const auto &m : missing)
      w.problem += " " + m;
  }
  finish_witness(w, g);
  return w;
}

inline WitnessCycle labelled_witness(std::string name, std::string group, std::vector<std::string> words,
                                     std::vector<std::string> labels) {
  WitnessCycle w;
  w.name = std::move(name);
  w.group = std::move(group);
  w.words = std::move(words);
  const FiniteGroup g = build(w.group);
  for (const auto &l : labels)
    w.elements.push_back(element_by_label(g, l));
  w.resolved = true;
  finish_witness(w, g);
  return w;
}

} // namespace detail

/// The 12-cycle in S6, points 1..6.
inline WitnessCycle symmetric_12_cycle() {
  return detail::permutation_witness("S6 12-cycle", "S6",
                                     {"(1,2,3)(4,5)", "(4,5)", "(1,2,6)(4,5)", "(1,2,6)", "(1,2,6)(3,4)", "(3,4)",
                                      "(1,2,5)(3,4)", "(1,2,5)", "(1,2,5)(4,6)", "(4,6)", "(1,2,3)(4,6)",
                                      "(1,2,3)"});
}

inline const std::vector<std::string> &alternating_8_cycle_words() {
  static const std::vector<std::string> words{"(1,2,3)(4,5)(6,7)", "(4,5)(6,7)",       "(4,6,5,7)(1,2)",
                                              "(1,2)",             "(1,2)(4,5,6,7)",   "(4,6)(5,7)",
                                              "(1,2,3)(4,6)(5,7)", "(1,2,3)"};
  return words;
}

/// The 8-cycle offered for A7, points 1..7, checked inside A7.
inline WitnessCycle alternating_8_cycle() {
  return detail::permutation_witness("A7 8-cycle", "A7", alternating_8_cycle_words());
}

/// The same eight permutations checked inside S7, where all of them exist.
inline WitnessCycle alternating_8_cycle_in_s7() {
  return detail::permutation_witness("A7 8-cycle inside S7", "S7", alternating_8_cycle_words());
}

/**
 * The 6-cycle for C_pq x (C_p : C_q) at (p, q) = (3, 2): C6 = <c>, S3 with b
 * of order 3. In the group C6 x S3, c is "a" in C6 and b is the 3-cycle (0 1 2).
 */
inline WitnessCycle product_6_cycle() {
  const std::string b = "(0 1 2)";
  const auto el = [&](const std::string &c, const std::string &h) { return "(" + c + ", " + h + ")"; };
  return detail::labelled_witness("C6 x S3 6-cycle", "C6 x S3",
                                  {"(c,1)", "(c^2,1)", "(c^2,b)", "(1,b)", "(c^3,b)", "(c^3,1)"},
                                  {el("a", "()"), el("a^2", "()"), el("a^2", b), el("1", b), el("a^3", b),
                                   el("a^3", "()")});
}

/**
 * The 8-cycle for two non-cyclic factors over three primes, instantiated in
 * (C3 x C3) x D5 with a = (x,1), b = (1,y) in C3 x C3, c a reflection and d a
 * rotation of D5.
 */
inline WitnessCycle three_prime_8_cycle() {
  const std::string a = "(a, 1)", b = "(1, a)";
  const std::string one = "(1, 1)";
  const auto el = [](const std::string &x, const std::string &y) { return "(" + x + ", " + y + ")"; };
  return detail::labelled_witness(
      "C3 x C3 x D5 8-cycle", "C3 x C3 x D5",
      {"(a,c)", "(a,1)", "(a,d)", "(1,d)", "(b,d)", "(b,1)", "(b,c)", "(1,c)"},
      {el(a, "b"), el(a, "1"), el(a, "a"), el(one, "a"), el(b, "a"), el(b, "1"), el(b, "b"), el(one, "b")});
}

inline std::vector<WitnessCycle> witness_cycles() {
  return {symmetric_12_cycle(), alternating_8_cycle(), alternating_8_cycle_in_s7(), product_6_cycle(),
          three_prime_8_cycle()};
}

/**
 * The elimination array for Dic_n = <a, b | a^2n, b^2 = a^n, b a b^-1 = a^-1>:
 * {ab, a^(n+1)b}, ..., {a^(2n-1)b, a^(n-1)b}, {b, a^n b}, odd powers of a,
 * even powers of a other than a^n, a^n, identity. Elements already placed
 * are skipped, so a^n appears once when n is odd.
 */
inline Ordering dicyclic_array_order(std::uint64_t n) {
  const FiniteGroup g = dicyclic(n);
  const auto *mb = dynamic_cast<const MetacyclicBackend *>(&g.backend());
  if (!mb)
    throw InternalError("dicyclic group without metacyclic backend");
  std::vector<bool> placed(g.order(), false);
  Ordering out;
  const auto put = [&](std::uint64_t i, std::uint64_t j) {
    const ElementId x = mb->element(i % (2 * n), j);
    if (!placed[x]) {
      placed[x] = true;
      out.push_back(x);
    }
  };
  for (std::uint64_t k = 1; k < n; ++k) {
    put(k, 1);
    put(k + n, 1);
  }
  put(0, 1);
  put(n, 1);
  for (std::uint64_t k = 1; k < 2 * n; k += 2)
    if (k != n)
      put(k, 0);
  for (std::uint64_t k = 2; k < 2 * n; k += 2)
    if (k != n)
      put(k, 0);
  put(n, 0);
  put(0, 0);
  if (out.size() != g.order())
    throw InternalError("dicyclic array does not cover the group");
  return out;
}

/// Whether the published array is a PEO of P(Dic_n).
inline bool dicyclic_array_is_peo(std::uint64_t n) { return verify_peo(power_graph(dicyclic(n)), dicyclic_array_order(n)); }

} // namespace powerchord
