#pragma once

/**
 * @file io.hpp
 * @brief Text and JSON serialization: graphs, certificates, census reports,
 *        suite reports and the catalog.
 *
 * Every JSON payload carries "schema_version": 1. Output is deterministic:
 * vertices, edges and rows are emitted in id or catalog order.
 */

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "census.hpp"
#include "chordality.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "properties.hpp"

namespace powerchord {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// One "u v" line per edge, 0-based, u < v, sorted, newline-terminated.
inline std::string to_edge_list(const UndirectedGraph &g) {
  std::string out;
  for (const auto &[u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// One "u v" line per arc u -> v, sorted.
inline std::string to_edge_list(const Digraph &g) {
  std::string out;
  for (const auto &[u, v] : g.arcs())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

namespace detail {

inline std::string dot_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

template <class G> std::string dot_vertices(const G &g) {
  std::string out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    out += "  " + std::to_string(v) + " [label=\"" + dot_escape(g.label(v)) + "\"];\n";
  return out;
}

} // namespace detail

/// Undirected DOT: every vertex is declared with its label, then every edge.
inline std::string to_dot(const UndirectedGraph &g) {
  std::string out = "graph {\n" + detail::dot_vertices(g);
  for (const auto &[u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

inline std::string to_dot(const Digraph &g) {
  std::string out = "digraph {\n" + detail::dot_vertices(g);
  for (const auto &[u, v] : g.arcs())
    out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
  return out + "}\n";
}

/// Number of vertex declarations in DOT text produced by to_dot.
inline std::size_t dot_vertex_count(const std::string &dot) {
  std::istringstream in(dot);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line))
    if (line.find("[label=") != std::string::npos)
      ++n;
  return n;
}

namespace detail {

template <class G> json labels_json(const G &g) {
  json labels = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    labels.push_back(g.label(v));
  return labels;
}

inline json pairs_json(const std::vector<Edge> &edges) {
  json out = json::array();
  for (const auto &[u, v] : edges)
    out.push_back({u, v});
  return out;
}

} // namespace detail

/// {"schema_version", "directed": false, "n", "edges", "labels"}.
inline json graph_json(const UndirectedGraph &g) {
  return json{{"schema_version", kSchemaVersion},
              {"directed", false},
              {"n", g.vertex_count()},
              {"edges", detail::pairs_json(g.edges())},
              {"labels", detail::labels_json(g)}};
}

inline json graph_json(const Digraph &g) {
  return json{{"schema_version", kSchemaVersion},
              {"directed", true},
              {"n", g.vertex_count()},
              {"edges", detail::pairs_json(g.arcs())},
              {"labels", detail::labels_json(g)}};
}

/**
 * {"chordal": true, "peo": [...]} or
 * {"chordal": false, "hole": [...], "hole_elements": [...]}.
 * Throws InternalError if the certificate does not verify against `g`.
 */
inline json certificate_json(const UndirectedGraph &g, const ChordalityCertificate &c) {
  if (!c.verify(g))
    throw InternalError("certificate does not verify");
  if (c.chordal())
    return json{{"chordal", true}, {"peo", c.peo()}};
  json elements = json::array();
  for (auto v : c.hole())
    elements.push_back(g.label(v));
  return json{{"chordal", false}, {"hole", c.hole()}, {"hole_elements", elements}};
}

/// {"schema_version", "group", "order", "chordal", "certificate"}.
inline json chordality_json(const std::string &group, const UndirectedGraph &g, const ChordalityCertificate &c) {
  return json{{"schema_version", kSchemaVersion},
              {"group", group},
              {"order", g.vertex_count()},
              {"chordal", c.chordal()},
              {"certificate", certificate_json(g, c)}};
}

inline json verdict_json(const OracleCheck &c) {
  json out{{"source", c.verdict.source},
           {"prediction", to_string(c.verdict.prediction)},
           {"rationale", c.verdict.rationale},
           {"agrees", c.agrees}};
  if (c.ledgered)
    out["known_discrepancy"] = c.ledgered->explanation;
  return out;
}

inline json cross_check_json(const CrossCheckReport &r) {
  json oracles = json::array();
  for (const auto &c : r.checks)
    if (c.verdict.applicable())
      oracles.push_back(verdict_json(c));
  return json{{"name", r.group},          {"spec", r.spec},       {"order", r.order},
              {"chordal", r.chordal},     {"certificate", r.certificate},
              {"oracles", oracles},       {"agree", r.clean()},   {"warnings", r.warnings}};
}

inline json census_json(const CensusReport &rep) {
  json rows = json::array();
  for (const auto &row : rep.rows) {
    json j = cross_check_json(row.report);
    j["index"] = row.index;
    rows.push_back(std::move(j));
  }
  json out{{"order", rep.order}, {"prime_power", rep.prime_power}, {"rows", rows}, {"non_chordal", rep.non_chordal()}};
  if (rep.prime_power)
    out["note"] = "chordal (p-group)";
  return out;
}

/// {"schema_version", "censuses": [...]}; timings are omitted so output is reproducible.
inline json census_json(const std::vector<CensusReport> &reps) {
  json all = json::array();
  for (const auto &r : reps)
    all.push_back(census_json(r));
  return json{{"schema_version", kSchemaVersion}, {"censuses", all}};
}

namespace detail {

inline std::string verdict_word(bool chordal) { return chordal ? "chordal" : "non-chordal"; }

inline std::string oracle_cell(const CrossCheckReport &r) {
  std::vector<std::string> parts;
  for (const auto &c : r.checks)
    if (c.verdict.applicable())
      parts.push_back(c.verdict.source + (c.agrees ? "" : (c.ledgered ? "(known)" : "(!)")));
  return parts.empty() ? "-" : join(parts, ",");
}

inline std::string table(const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width;
  for (const auto &r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i)
        width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream out;
  for (const auto &r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size())
        line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
  return out.str();
}

} // namespace detail

/// Aligned table with columns name, order, chordal, certificate, oracles, agree.
inline std::string census_table(const CensusReport &rep) {
  std::vector<std::vector<std::string>> rows{{"name", "order", "chordal", "certificate", "oracles", "agree"}};
  for (const auto &row : rep.rows) {
    const auto &r = row.report;
    std::string verdict = detail::verdict_word(r.chordal);
    if (rep.prime_power && r.chordal)
      verdict = "chordal (p-group)";
    rows.push_back({r.group, std::to_string(r.order), verdict, r.certificate, detail::oracle_cell(r),
                    r.clean() ? (r.warnings.empty() ? "yes" : "known") : "NO"});
  }
  std::string out = "order " + std::to_string(rep.order) + ": " + std::to_string(rep.rows.size()) +
                    (rep.prime_power ? " spot checks" : " groups") + ", " + std::to_string(rep.non_chordal().size()) +
                    " non-chordal\n";
  return out + detail::table(rows);
}

/// One "STATUS  name  detail" line per check, then warnings and a summary line.
inline std::string suite_text(const SuiteReport &r) {
  std::string out;
  for (const auto &c : r.checks)
    out += to_string(c.status) + "  " + c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]") + "\n";
  for (const auto &w : r.warnings)
    out += "warning: " + w + "\n";
  out += "summary: " + std::to_string(r.count(CheckStatus::pass)) + " passed, " +
         std::to_string(r.count(CheckStatus::known_discrepancy)) + " known discrepancies, " +
         std::to_string(r.count(CheckStatus::fail)) + " failed\n";
  return out;
}

inline std::string property_text(const PropertyReport &r) {
  std::string out;
  for (const auto &v : r.violations)
    out += "FAIL  " + v.group + ": " + v.property + "  [" + v.detail + "]\n";
  out += "properties: " + std::to_string(r.groups) + " groups, " + std::to_string(r.checks) + " checks, " +
         std::to_string(r.violations.size()) + " violations\n";
  return out;
}

/// The catalog as {"schema_version", "groups": [{order, index, name, kind, recipe, note, fingerprint}]}.
inline json catalog_json() {
  json groups = json::array();
  for (const auto &e : catalog()) {
    const char *kind = e.kind == RecipeKind::spec ? "spec" : e.kind == RecipeKind::metacyclic ? "metacyclic" : "permutations";
    groups.push_back(json{{"order", e.order},
                          {"index", e.index},
                          {"name", e.name},
                          {"kind", kind},
                          {"recipe", e.recipe},
                          {"note", e.note},
                          {"fingerprint", e.expected_fingerprint}});
  }
  return json{{"schema_version", kSchemaVersion}, {"groups", groups}};
}

} // namespace powerchord
