#pragma once

/**
 * @file census.hpp
 * @brief Per-order censuses over the catalog, published non-chordal lists,
 *        and the aggregate verification suite.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "catalog.hpp"
#include "chordality.hpp"
#include "oracles.hpp"
#include "power_graph.hpp"
#include "witnesses.hpp"

namespace powerchord {

/// Worker count: POWER_CHORDAL_THREADS if set to a positive integer, else the core count.
inline unsigned default_thread_count() {
  if (const char *env = std::getenv("POWER_CHORDAL_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0)
      return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs job(i) for i in [0, n) on up to `threads` workers. Results must be stored by index.
template <class Job> void parallel_for(std::size_t n, unsigned threads, Job job) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next++; i < n; i = next++)
          job(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto &th : pool)
    th.join();
  for (auto &e : errors)
    if (e)
      std::rethrow_exception(e);
}

struct CensusRow {
  std::size_t index = 0; // 1-based catalog index, or spot-check position
  CrossCheckReport report;
  double seconds = 0;
};

struct CensusReport {
  std::uint64_t order = 0;
  /// Prime-power orders are not enumerated; rows are spot checks only.
  bool prime_power = false;
  std::vector<CensusRow> rows;

  std::vector<std::string> non_chordal() const {
    std::vector<std::string> out;
    for (const auto &r : rows)
      if (!r.report.chordal)
        out.push_back(r.report.group);
    return out;
  }
  bool clean() const {
    return std::all_of(rows.begin(), rows.end(), [](const CensusRow &r) { return r.report.clean(); });
  }
};

namespace detail {

inline CensusRow census_row(std::size_t index, const std::string &name, const GroupSpec &spec) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusRow row;
  row.index = index;
  row.report = cross_check(name, spec);
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

} // namespace detail

/**
 * Census of one order. Catalog orders give one row per group in catalog
 * order; prime-power orders give the spot-check groups. Throws
 * ConstructionError for orders outside both.
 */
inline CensusReport census(std::uint64_t order, unsigned threads = default_thread_count()) {
  CensusReport rep;
  rep.order = order;
  std::vector<std::pair<std::string, GroupSpec>> jobs;
  if (order >= 2 && order <= kCatalogMaxOrder && ntheory::is_prime_power(order)) {
    rep.prime_power = true;
    for (const auto &s : prime_power_spot_checks(order))
      jobs.emplace_back(s, parse_spec(s));
  } else {
    for (const auto &e : catalog_for_order(order))
      jobs.emplace_back(e.name, parse_spec(e.spec_text()));
  }
  rep.rows.resize(jobs.size());
  parallel_for(jobs.size(), threads,
               [&](std::size_t i) { rep.rows[i] = detail::census_row(i + 1, jobs[i].first, jobs[i].second); });
  return rep;
}

/// A published list of the non-chordal groups of one order.
struct PublishedList {
  std::uint64_t order = 0;
  std::string label;
  std::vector<std::string> non_chordal;
};

/// Published lists for the orders with non-chordal groups; every other catalog order is claimed all-chordal.
inline const std::vector<PublishedList> &published_lists() {
  static const std::vector<PublishedList> lists{
      {24, "order-24 theorem", {"C2 x C12", "C3 x D4", "C3 x Q8"}},
      {30, "order-30 theorem", {"C30"}},
      {36, "order-36 theorem", {"C36", "C6 x C6", "C2 x (C3xC3):C2", "C6 x S3"}},
      {36, "order-36 remark", {"C36", "C6 x C6", "C6 x S3"}},
      {40, "order-40 theorem", {"C2 x C20", "C5 x D4", "C5 x Q8"}},
      {42, "order-42 theorem", {"C42"}},
  };
  return lists;
}

inline std::vector<PublishedList> published_lists_for(std::uint64_t order) {
  std::vector<PublishedList> out;
  for (const auto &l : published_lists())
    if (l.order == order)
      out.push_back(l);
  if (out.empty())
    out.push_back({order, "order-" + std::to_string(order) + " lemmas", {}});
  return out;
}

/// Computed non-chordal set against one published list.
struct ListComparison {
  PublishedList list;
  std::vector<std::string> computed;
  std::vector<std::string> missing; // published non-chordal, computed chordal
  std::vector<std::string> extra;   // computed non-chordal, not published
  std::vector<std::string> unexplained;

  bool exact() const { return missing.empty() && extra.empty(); }
  bool explained() const { return unexplained.empty(); }
};

inline ListComparison compare(const CensusReport &rep, const PublishedList &list) {
  ListComparison c;
  c.list = list;
  c.computed = rep.non_chordal();
  for (const auto &g : list.non_chordal)
    if (std::find(c.computed.begin(), c.computed.end(), g) == c.computed.end())
      c.missing.push_back(g);
  for (const auto &g : c.computed)
    if (std::find(list.non_chordal.begin(), list.non_chordal.end(), g) == list.non_chordal.end())
      c.extra.push_back(g);
  for (const auto &g : c.missing) {
    const auto *d = find_discrepancy(g, "census");
    if (!d || d->computed != Prediction::chordal)
      c.unexplained.push_back(g);
  }
  for (const auto &g : c.extra) {
    const auto *d = find_discrepancy(g, "census");
    if (!d || d->computed != Prediction::non_chordal)
      c.unexplained.push_back(g);
  }
  return c;
}

enum class CheckStatus { pass, fail, known_discrepancy };

inline std::string to_string(CheckStatus s) {
  switch (s) {
  case CheckStatus::pass:
    return "PASS";
  case CheckStatus::fail:
    return "FAIL";
  case CheckStatus::known_discrepancy:
    return "KNOWN";
  }
  return "?";
}

struct SuiteCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  std::vector<std::string> warnings;

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const SuiteCheck &c) { return c.status == CheckStatus::fail; });
  }
  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const SuiteCheck &c) { return c.status == s; }));
  }
  void add(std::string name, CheckStatus status, std::string detail = {}) {
    checks.push_back({std::move(name), status, std::move(detail)});
  }
  void add(std::string name, bool ok, std::string detail = {}) {
    add(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail));
  }
};

namespace detail {

inline std::string join(const std::vector<std::string> &v, const char *sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? sep : "") + v[i];
  return out;
}

inline std::string set_text(const std::vector<std::string> &v) { return "{" + join(v) + "}"; }

/// Status for a computed verdict against an oracle prediction, honouring the ledger.
inline CheckStatus verdict_status(const std::string &group, const OracleVerdict &v, bool computed_chordal) {
  if (!v.applicable() || v.prediction == prediction_from(computed_chordal))
    return CheckStatus::pass;
  const auto *d = find_discrepancy(group, v.source);
  return d && d->computed == prediction_from(computed_chordal) ? CheckStatus::known_discrepancy : CheckStatus::fail;
}

inline void add_census_checks(SuiteReport &out, const CensusReport &rep) {
  const std::string tag = "order " + std::to_string(rep.order);
  std::size_t disagreements = 0;
  for (const auto &row : rep.rows) {
    for (const auto &c : row.report.checks)
      if (!c.agrees && !c.ledgered)
        ++disagreements;
    for (const auto &w : row.report.warnings)
      out.warnings.push_back(w);
  }
  out.add(tag + ": oracle agreement", disagreements == 0,
          std::to_string(rep.rows.size()) + " groups, " + std::to_string(disagreements) + " unexplained disagreements");
  if (rep.prime_power)
    return;
  for (const auto &list : published_lists_for(rep.order)) {
    const auto cmp = compare(rep, list);
    std::string detail = "computed " + set_text(cmp.computed) + ", published " + set_text(list.non_chordal);
    if (!cmp.missing.empty())
      detail += "; published but computed chordal " + set_text(cmp.missing);
    if (!cmp.extra.empty())
      detail += "; computed non-chordal but not published " + set_text(cmp.extra);
    const CheckStatus st =
        cmp.exact() ? CheckStatus::pass : (cmp.explained() ? CheckStatus::known_discrepancy : CheckStatus::fail);
    out.add(tag + ": " + list.label, st, detail);
  }
}

inline void add_witness_checks(SuiteReport &out) {
  for (const auto &w : witness_cycles()) {
    std::string detail;
    CheckStatus st;
    if (w.induced) {
      st = CheckStatus::pass;
      detail = "published cycle of length " + std::to_string(w.elements.size()) + " verified induced";
    } else {
      detail = w.problem;
      if (w.substitute_verified)
        detail += "; substitute hole of length " + std::to_string(w.substitute.size()) + " verified";
      else if (w.group_chordal)
        detail += "; " + w.group + " is chordal, so no substitute exists";
      st = find_discrepancy(w.name, "witness") ? CheckStatus::known_discrepancy : CheckStatus::fail;
    }
    out.add(w.name + ": induced", st, detail);
  }
  std::vector<std::string> bad;
  for (std::uint64_t n = 2; n <= 16; ++n)
    if (oracle_dicyclic(n).prediction == Prediction::chordal && !dicyclic_array_is_peo(n))
      bad.push_back("Dic" + std::to_string(n));
  out.add("dicyclic elimination array is a PEO for chordal Dic_n, n <= 16",
          bad.empty() ? CheckStatus::pass
                      : (find_discrepancy("Dic_n", "witness") ? CheckStatus::known_discrepancy : CheckStatus::fail),
          bad.empty() ? "" : "not a PEO for " + join(bad));
}

inline void add_family_check(SuiteReport &out, const std::string &spec, const OracleVerdict &v) {
  const FiniteGroup g = build(spec);
  const auto graph = power_graph(g);
  const auto cert = is_chordal(graph);
  const auto st = verdict_status(g.name(), v, cert.chordal());
  out.add(spec + ": " + (cert.chordal() ? "chordal" : "non-chordal"), st,
          certificate_summary(graph, cert) + "; " + v.source + " predicts " + to_string(v.prediction));
}

} // namespace detail

/// Extra direct products used to exercise the product rules beyond the catalog.
inline const std::vector<std::string> &product_instances() {
  static const std::vector<std::string> specs{
      "C3 x C3 x D5", "S3 x D5",      "C2 x C2 x A5",  "C6 x A4",     "C2 x SL(2,3)",  "C2 x PSL(2,7)",
      "C2 x C2 x F7", "C5 x Dic3",    "C3 x D10",      "C2 x D4",     "D4 x S3",       "C4 x A4",
      "C2 x C5 x S3", "C3 x C3 x S3", "C9 x S3",       "C10 x C10",   "C4 x F5",       "C3 x G(21,2)",
      "C6 x Dic3",    "C12 x S3",     "C6 x G(18,5)",  "C10 x D5",    "C6 x D6",       "C2 x C6 x S3",
      "C15 x S3",     "C5 x D6",      "C2 x G(42,6)",  "C4 x G(18,5)", "C3 x G(20,5)", "C2 x Q8 x C3"};
  return specs;
}

/**
 * Every census with its published lists, the witness fixtures, the symmetric,
 * alternating, PSL(2,q) and M11 checks, and the extra product instances.
 * `include_slow` adds A8 and PSL(3,3).
 */
inline SuiteReport verify_published_suite(unsigned threads = default_thread_count(), bool include_slow = false) {
  SuiteReport out;
  for (std::uint64_t n = 2; n <= kCatalogMaxOrder; ++n) {
    if (!catalog_covers(n) && !ntheory::is_prime_power(n))
      continue;
    detail::add_census_checks(out, census(n, threads));
  }
  detail::add_witness_checks(out);
  for (std::uint64_t n = 3; n <= 6; ++n)
    detail::add_family_check(out, "S" + std::to_string(n), oracle_symmetric(n));
  for (std::uint64_t n = 4; n <= (include_slow ? 8u : 7u); ++n)
    detail::add_family_check(out, "A" + std::to_string(n), oracle_alternating(n));
  for (std::uint64_t q : {4, 5, 7, 8, 9, 11, 13})
    detail::add_family_check(out, "PSL(2," + std::to_string(q) + ")", oracle_psl2(q));
  detail::add_family_check(out, "PSL(3,2)", oracle_psl3(2));
  if (include_slow)
    detail::add_family_check(out, "PSL(3,3)", oracle_psl3(3));

  {
    const FiniteGroup m11 = build("M11");
    const auto classes = order_class_counts(m11);
    const std::map<std::uint64_t, std::uint64_t> published{{2, 165}, {3, 440}, {4, 990}, {6, 1320}, {8, 1980}};
    bool ok = m11.order() == 7920;
    std::string detail = "order " + std::to_string(m11.order());
    for (auto [o, c] : published) {
      const auto it = classes.find(o);
      const std::uint64_t got = it == classes.end() ? 0 : it->second;
      ok = ok && got == c;
      detail += ", " + std::to_string(o) + ":" + std::to_string(got);
    }
    const auto rest = classes.count(5) ? classes.at(5) : 0;
    const auto rest11 = classes.count(11) ? classes.at(11) : 0;
    ok = ok && 1 + 165 + 440 + 990 + 1320 + 1980 + rest + rest11 == 7920;
    detail += ", 5:" + std::to_string(rest) + ", 11:" + std::to_string(rest11);
    out.add("M11: order and element-order classes", ok, detail);
    const auto graph = power_graph(m11);
    const auto cert = is_chordal(graph);
    out.add(std::string("M11: ") + (cert.chordal() ? "chordal" : "non-chordal, hole verified"),
            !cert.chordal() && verify_induced_cycle(graph, cert.hole()), certificate_summary(graph, cert));
  }

  std::vector<CrossCheckReport> products(product_instances().size());
  parallel_for(products.size(), threads, [&](std::size_t i) {
    products[i] = cross_check(product_instances()[i], parse_spec(product_instances()[i]));
  });
  for (const auto &r : products) {
    std::size_t unexplained = 0, ledgered = 0;
    for (const auto &c : r.checks) {
      unexplained += !c.agrees && !c.ledgered;
      ledgered += !c.agrees && c.ledgered;
    }
    for (const auto &w : r.warnings)
      out.warnings.push_back(w);
    const CheckStatus st = unexplained || r.contradictory_products
                               ? CheckStatus::fail
                               : (ledgered ? CheckStatus::known_discrepancy : CheckStatus::pass);
    out.add("product " + r.group + ": " + (r.chordal ? "chordal" : "non-chordal"), st,
            std::to_string(r.applicable_count()) + " applicable oracles, " + std::to_string(ledgered) +
                " ledgered disagreements");
  }
  return out;
}

} // namespace powerchord
