#pragma once

/**
 * @file cli.hpp
 * @brief The power-chordal command line: build, chordal, census, predicate,
 *        verify and catalog.
 *
 * Exit codes: 0 the command ran (verdicts are in the payload), 1 verify found
 * an unexplained failure, 2 usage or parse error, 3 construction error.
 */

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <powerchord/powerchord.hpp>

namespace powerchord::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitConstruction = 3;

/// Parses "a..b" or a single order "a" into an inclusive range.
inline std::pair<std::uint64_t, std::uint64_t> parse_order_range(const std::string &text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const auto a = std::stoull(text, &used);
      if (used != text.size())
        throw InvalidInput("");
      return {a, a};
    }
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const auto a = std::stoull(lo, &used);
    if (used != lo.size())
      throw InvalidInput("");
    const auto b = std::stoull(hi, &used);
    if (used != hi.size() || b < a)
      throw InvalidInput("");
    return {a, b};
  } catch (const std::exception &) {
    throw InvalidInput("invalid order range '" + text + "', expected a..b");
  }
}

namespace detail {

inline void emit(const std::string &payload, const std::string &path, std::ostream &out) {
  if (path.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw InvalidInput("cannot open output file " + path);
  file << payload;
}

template <class G> std::string render_graph(const G &g, const std::string &format) {
  if (format == "edgelist")
    return to_edge_list(g);
  if (format == "dot")
    return to_dot(g);
  return graph_json(g).dump(2) + "\n";
}

inline std::string build_payload(const std::string &spec, const std::string &kind, const std::string &format) {
  const FiniteGroup g = build(spec);
  if (kind == "directed")
    return render_graph(directed_power_graph(g), format);
  if (kind == "proper")
    return render_graph(proper_power_graph(g), format);
  if (kind == "enhanced")
    return render_graph(enhanced_power_graph(g), format);
  if (kind == "prime")
    return render_graph(prime_graph(g), format);
  return render_graph(power_graph(g), format);
}

inline std::string chordal_payload(const std::string &spec) {
  const FiniteGroup g = build(spec);
  const auto graph = power_graph(g);
  const auto cert = is_chordal(graph);
  return chordality_json(g.name(), graph, cert).dump(2) + "\n";
}

inline std::string census_payload(const std::string &range, const std::string &format) {
  const auto [lo, hi] = parse_order_range(range);
  std::vector<CensusReport> reports;
  for (std::uint64_t n = lo; n <= hi; ++n)
    reports.push_back(census(n));
  if (format == "json")
    return census_json(reports).dump(2) + "\n";
  std::string out;
  for (std::size_t i = 0; i < reports.size(); ++i)
    out += (i ? "\n" : "") + census_table(reports[i]);
  return out;
}

inline bool predicate_value(const std::string &name, std::uint64_t n) {
  if (name == "cyclic")
    return ntheory::is_chordal_cyclic_order(n);
  if (name == "dihedral")
    return oracle_dihedral(n).prediction == Prediction::chordal;
  if (name == "dicyclic")
    return oracle_dicyclic(n).prediction == Prediction::chordal;
  if (name == "psl2")
    return ntheory::psl2_criterion(n);
  if (name == "suzuki")
    return ntheory::suzuki_criterion(n);
  return ntheory::ree_sufficient(n);
}

} // namespace detail

/**
 * Runs one invocation. `args` excludes the program name. Standard output
 * payloads go to `out`, diagnostics to `err`.
 */
inline int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Power graphs of finite groups and their chordality", "power-chordal"};
  app.require_subcommand(1);

  std::string spec, format = "edgelist", kind = "power", out_path;
  auto *build_cmd = app.add_subcommand("build", "Build a graph of a group and export it");
  build_cmd->add_option("spec", spec, "Group spec, e.g. \"C6\", \"D5\", \"C3 x S3\"")->required();
  build_cmd->add_option("--format", format, "edgelist, dot or json")
      ->check(CLI::IsMember({"edgelist", "dot", "json"}));
  build_cmd->add_option("--graph", kind, "power, directed, proper, enhanced or prime")
      ->check(CLI::IsMember({"power", "directed", "proper", "enhanced", "prime"}));
  build_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

  auto *chordal_cmd = app.add_subcommand("chordal", "Decide chordality of P(G) with a certificate");
  chordal_cmd->add_option("spec", spec, "Group spec")->required();

  std::string orders, census_format = "table";
  auto *census_cmd = app.add_subcommand("census", "Census of all catalog groups of the given orders");
  census_cmd->add_option("--orders", orders, "Order range a..b")->required();
  census_cmd->add_option("--format", census_format, "table or json")->check(CLI::IsMember({"table", "json"}));

  std::string predicate;
  std::uint64_t n = 0;
  auto *predicate_cmd = app.add_subcommand("predicate", "Evaluate a numeric chordality criterion");
  predicate_cmd->add_option("name", predicate, "cyclic, dihedral, dicyclic, psl2, suzuki or ree")
      ->required()
      ->check(CLI::IsMember({"cyclic", "dihedral", "dicyclic", "psl2", "suzuki", "ree"}));
  predicate_cmd->add_option("n", n, "Parameter")->required();

  std::string suite = "paper";
  bool slow = false;
  auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite; exits 1 on unexplained failure");
  verify_cmd->add_option("--suite", suite, "paper, properties or all")
      ->check(CLI::IsMember({"paper", "properties", "all"}));
  verify_cmd->add_flag("--slow", slow, "Include A8 and PSL(3,3)");

  auto *catalog_cmd = app.add_subcommand("catalog", "Catalog operations");
  auto *export_cmd = catalog_cmd->add_subcommand("export", "Dump the catalog as JSON");
  catalog_cmd->require_subcommand(1);

  std::vector<std::string> argv{args.rbegin(), args.rend()};
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*build_cmd) {
      detail::emit(detail::build_payload(spec, kind, format), out_path, out);
    } else if (*chordal_cmd) {
      out << detail::chordal_payload(spec);
    } else if (*census_cmd) {
      out << detail::census_payload(orders, census_format);
    } else if (*predicate_cmd) {
      out << (detail::predicate_value(predicate, n) ? "true" : "false") << "\n";
    } else if (*verify_cmd) {
      bool ok = true;
      if (suite == "paper" || suite == "all") {
        const auto report = verify_published_suite(default_thread_count(), slow);
        out << suite_text(report);
        ok = ok && report.passed();
      }
      if (suite == "properties" || suite == "all") {
        const auto report = property_suite();
        out << property_text(report);
        ok = ok && report.ok();
      }
      return ok ? kExitOk : kExitVerifyFailed;
    } else if (*export_cmd) {
      out << catalog_json().dump(2) << "\n";
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstructionError &e) {
    err << "error: " << e.what() << "\n";
    return kExitConstruction;
  }
  return kExitOk;
}

inline int run_cli(int argc, char **argv, std::ostream &out = std::cout, std::ostream &err = std::cerr) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace powerchord::cli
