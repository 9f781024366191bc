// Acceptance suite: one PASS/FAIL line per criterion with its runtime and a
// short account of what was computed. Criteria 1-14 gate the exit status;
// criterion 15 is reported but does not affect it.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <powerchord/powerchord.hpp>

using namespace powerchord;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  bool gating;
  std::function<Outcome()> run;
};

std::string set_text(const std::vector<std::string> &v) { return detail::set_text(v); }

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Outcome census_exact(std::uint64_t order, std::size_t groups, const std::vector<std::string> &expected) {
  const auto rep = census(order);
  const auto got = rep.non_chordal();
  const bool ok = rep.rows.size() == groups && sorted(got) == sorted(expected);
  return {ok, std::to_string(rep.rows.size()) + " groups, non-chordal " + set_text(got) + ", expected " +
                  set_text(expected)};
}

bool verified_chordal(const FiniteGroup &g) {
  const auto graph = power_graph(g);
  const auto cert = is_chordal(graph);
  return cert.chordal() && verify_peo(graph, cert.peo());
}

bool verified_non_chordal(const FiniteGroup &g) {
  const auto graph = power_graph(g);
  const auto cert = is_chordal(graph);
  return !cert.chordal() && verify_induced_cycle(graph, cert.hole());
}

Outcome order_36() {
  const auto rep = census(36);
  const auto got = rep.non_chordal();
  const std::set<std::string> have(got.begin(), got.end());
  std::vector<std::string> absent;
  for (const char *name : {"C36", "C6 x C6", "C6 x S3"})
    if (!have.count(name))
      absent.push_back(name);
  const std::string disputed = "C2 x (C3xC3):C2";
  std::string detail = "non-chordal " + set_text(got);
  if (!absent.empty())
    detail += "; required but computed chordal " + set_text(absent);
  detail += "; " + disputed + " computed " + (have.count(disputed) ? "non-chordal" : "chordal");
  bool flagged = false;
  for (const auto &list : published_lists_for(36)) {
    const bool listed = std::count(list.non_chordal.begin(), list.non_chordal.end(), disputed) != 0;
    const bool agrees = listed == (have.count(disputed) != 0);
    detail += "; " + list.label + (listed ? " lists it" : " omits it") + (agrees ? " (agrees)" : " (DISCREPANCY)");
    flagged = flagged || !agrees;
  }
  return {absent.empty() && flagged && rep.rows.size() == 14, detail};
}

Outcome other_orders() {
  std::vector<std::string> bad;
  std::size_t groups = 0;
  for (std::uint64_t n = 2; n <= kCatalogMaxOrder; ++n) {
    if (!catalog_covers(n) || n == 24 || n == 30 || n == 36 || n == 40 || n == 42)
      continue;
    for (const auto &e : catalog_for_order(n)) {
      ++groups;
      if (!verified_chordal(build(e)))
        bad.push_back(e.name);
    }
  }
  return {bad.empty(), std::to_string(groups) + " groups, non-chordal or unverified " + set_text(bad)};
}

Outcome symmetric_groups() {
  bool ok = verified_chordal(symmetric(3)) && verified_chordal(symmetric(4)) && verified_chordal(symmetric(5));
  const bool s6 = verified_non_chordal(symmetric(6));
  const auto w = symmetric_12_cycle();
  return {ok && s6 && w.induced, std::string("S3-S5 chordal: ") + (ok ? "yes" : "no") +
                                     ", S6 hole verified: " + (s6 ? "yes" : "no") +
                                     ", published 12-cycle induced: " + (w.induced ? "yes" : "no (" + w.problem + ")")};
}

Outcome alternating_groups() {
  const bool small = verified_chordal(alternating(4)) && verified_chordal(alternating(5)) &&
                     verified_chordal(alternating(6));
  const bool a7 = verified_non_chordal(alternating(7));
  const auto w = alternating_8_cycle();
  std::string detail = std::string("A4-A6 chordal: ") + (small ? "yes" : "no") + ", A7 computed " +
                       (a7 ? "non-chordal with verified hole" : "chordal with verified PEO") +
                       ", published 8-cycle: " + (w.induced ? "induced" : w.problem);
  return {small && a7 && w.induced, detail};
}

Outcome psl2_family() {
  std::vector<std::string> bad;
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13}) {
    const auto spec = "PSL(2," + std::to_string(q) + ")";
    const bool chordal = is_chordal(power_graph(build(spec))).chordal();
    if (chordal != ntheory::psl2_criterion(q))
      bad.push_back(spec);
  }
  const bool psl27 = verified_chordal(build("PSL(2,7)"));
  const bool psl32 = verified_chordal(build("PSL(3,2)"));
  return {bad.empty() && psl27 && psl32, "mismatches " + set_text(bad) + ", PSL(2,7) chordal: " +
                                             (psl27 ? "yes" : "no") + ", PSL(3,2) chordal: " + (psl32 ? "yes" : "no")};
}

Outcome mathieu() {
  const auto m11 = build("M11");
  const auto classes = order_class_counts(m11);
  const std::map<std::uint64_t, std::uint64_t> published{{2, 165}, {3, 440}, {4, 990}, {6, 1320}, {8, 1980}};
  bool ok = m11.order() == 7920;
  std::uint64_t total = 0;
  for (auto [o, c] : classes)
    total += c;
  for (auto [o, c] : published)
    ok = ok && classes.count(o) && classes.at(o) == c;
  ok = ok && total == 7920 && classes.count(5) && classes.count(11);
  const bool hole = verified_non_chordal(m11);
  return {ok && hole, "order " + std::to_string(m11.order()) + ", class counts match: " + (ok ? "yes" : "no") +
                          ", 5:" + std::to_string(classes.count(5) ? classes.at(5) : 0) + ", 11:" +
                          std::to_string(classes.count(11) ? classes.at(11) : 0) + ", hole verified: " +
                          (hole ? "yes" : "no")};
}

Outcome properties() {
  const auto r = property_suite();
  std::string detail = std::to_string(r.groups) + " groups, " + std::to_string(r.checks) + " checks, " +
                       std::to_string(r.violations.size()) + " violations";
  if (!r.violations.empty())
    detail += "; first: " + r.violations.front().group + " " + r.violations.front().property;
  return {r.ok(), detail};
}

Outcome engine_vs_oracle() {
  std::size_t graphs = 0, mismatches = 0, dirac_failures = 0;
  const auto check = [&](const UndirectedGraph &g) {
    ++graphs;
    const auto cert = is_chordal(g);
    if (!cert.verify(g) || cert.chordal() != elimination_oracle(g))
      ++mismatches;
    if (cert.chordal() && !g.is_complete() && !has_two_nonadjacent_simplicial(g))
      ++dirac_failures;
  };
  for (const auto &spec : property_suite_specs()) {
    const auto g = build(spec);
    if (g.order() <= 200)
      check(power_graph(g));
  }
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng() % 40;
    const unsigned density = 1 + rng() % 9;
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 10 < density)
          edges.emplace_back(u, v);
    check(UndirectedGraph(n, edges));
  }
  return {mismatches == 0 && dirac_failures == 0, std::to_string(graphs) + " graphs, " + std::to_string(mismatches) +
                                                      " mismatches, " + std::to_string(dirac_failures) +
                                                      " Dirac failures"};
}

Outcome oracle_agreement() {
  std::size_t rows = 0, applicable = 0, ledgered = 0;
  std::vector<std::string> unexplained;
  for (std::uint64_t n = 2; n <= kCatalogMaxOrder; ++n) {
    if (!catalog_covers(n))
      continue;
    for (const auto &row : census(n).rows) {
      ++rows;
      applicable += row.report.applicable_count();
      for (const auto &c : row.report.checks)
        ledgered += !c.agrees && c.ledgered;
      if (!row.report.clean())
        unexplained.push_back(row.report.group);
    }
  }
  return {unexplained.empty(), std::to_string(rows) + " groups, " + std::to_string(applicable) +
                                   " applicable verdicts, " + std::to_string(ledgered) +
                                   " ledgered disagreements, unexplained " + set_text(unexplained)};
}

Outcome witness_fixtures() {
  const auto six = product_6_cycle();
  const auto eight = three_prime_8_cycle();
  std::string detail = "C6 x S3 6-cycle: " + (six.induced ? std::string("induced") : six.problem) +
                       (six.group_chordal ? " (C6 x S3 is chordal)" : "") +
                       "; C3 x C3 x D5 8-cycle: " + (eight.induced ? std::string("induced") : eight.problem);
  return {six.induced && eight.induced, detail};
}

Outcome psl34() {
  const auto g = build("PSL(3,4)");
  const bool eppo = is_eppo(g);
  const bool chordal = verified_chordal(g);
  return {g.order() == 20160 && eppo && chordal, "order " + std::to_string(g.order()) + ", EPPO: " +
                                                     (eppo ? "yes" : "no") + ", chordal: " + (chordal ? "yes" : "no")};
}

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "census order 24", 10, true,
       [] { return census_exact(24, 15, {"C2 x C12", "C3 x D4", "C3 x Q8"}); }},
      {2, "census order 30", 5, true, [] { return census_exact(30, 4, {"C30"}); }},
      {3, "census order 40", 10, true,
       [] { return census_exact(40, 14, {"C2 x C20", "C5 x D4", "C5 x Q8"}); }},
      {4, "census order 42", 5, true, [] { return census_exact(42, 6, {"C42"}); }},
      {5, "census order 36", 10, true, order_36},
      {6, "other non-prime-power orders all chordal", 30, true, other_orders},
      {7, "symmetric groups", 60, true, symmetric_groups},
      {8, "alternating groups", 300, true, alternating_groups},
      {9, "PSL(2,q) criterion", 300, true, psl2_family},
      {10, "M11", 600, true, mathieu},
      {11, "property suite", 600, true, properties},
      {12, "engine vs elimination oracle", 120, true, engine_vs_oracle},
      {13, "oracle agreement over the catalog", 300, true, oracle_agreement},
      {14, "witness fixtures", 10, true, witness_fixtures},
      {15, "PSL(3,4) EPPO and chordal (stretch)", 1800, false, psl34},
  };

  int gating_failures = 0;
  for (const auto &c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = secs <= c.budget_seconds;
    const bool pass = o.pass && in_budget;
    if (!pass && c.gating)
      ++gating_failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s of %.0f s", secs, c.budget_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << timing
              << (c.gating ? "" : ", non-gating") << ") " << o.detail << (in_budget ? "" : " [over budget]")
              << std::endl;
  }
  std::cout << gating_failures << " gating criteria failed" << std::endl;
  return gating_failures == 0 ? 0 : 1;
}
