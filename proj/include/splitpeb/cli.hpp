#pragma once

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "splitpeb/formulas.hpp"
#include "splitpeb/generators.hpp"
#include "splitpeb/io.hpp"
#include "splitpeb/oracle.hpp"
#include "splitpeb/recognition.hpp"
#include "splitpeb/strategy.hpp"

namespace splitpeb::cli {

using io::json;

enum class OutputFormat { Json, Text };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

struct Command {
  std::string subcommand;  // compute, compute-root, recognize, witness, brute, verify, gen
  std::string graph_path;
  std::optional<VertexId> root;
  std::optional<std::string> kind;
  int k = 1;
  bool semigreedy = false;
  bool verify = false;
  std::optional<std::string> config_path;  // brute: test one configuration
  OutputFormat output = OutputFormat::Json;
  // gen
  std::string family;  // sun, complete, pyramid, phoenix, random
  int n = 0;
  int k_size = 0;
  int s_size = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
};

struct Outcome {
  int exit_code = kExitOk;
  json report;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oracle state cap: PEBBLE_NODE_BUDGET if set, else the library default.
inline std::uint64_t node_budget_from_env() {
  const char* raw = std::getenv("PEBBLE_NODE_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultNodeBudget;
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || raw[used] != '\0') throw UsageError(std::string("PEBBLE_NODE_BUDGET is not a number: ") + raw);
  return v;
}

namespace detail {

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"compute", "compute-root", "recognize", "witness",
                                              "brute",   "verify",       "gen"};
  return names;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

inline VertexId checked_root(const Command& cmd, const SplitGraph& g) {
  if (!g.valid_vertex(*cmd.root)) {
    throw Error(ErrorCode::InvalidArgument,
                "root " + std::to_string(*cmd.root) + " out of range for n = " + std::to_string(g.n()));
  }
  return *cmd.root;
}

/// Argument checks that need no graph, run before any file is read.
inline void check_arguments(const Command& cmd) {
  const auto& names = subcommands();
  require(std::find(names.begin(), names.end(), cmd.subcommand) != names.end(),
          "unknown subcommand '" + cmd.subcommand + "'");
  if (cmd.subcommand == "gen") {
    require(!cmd.family.empty(), "gen needs --family");
    if (cmd.family == "sun" || cmd.family == "complete") {
      require(cmd.n > 0, "gen --family " + cmd.family + " needs --n");
    } else if (cmd.family == "random") {
      require(cmd.k_size > 0, "gen --family random needs --k-size");
      require(cmd.s_size >= 0, "--s-size must be nonnegative");
    } else {
      require(cmd.family == "pyramid" || cmd.family == "phoenix", "unknown family '" + cmd.family + "'");
    }
    return;
  }
  require(!cmd.graph_path.empty(), cmd.subcommand + " needs --graph");
  if (cmd.subcommand == "compute-root" || cmd.subcommand == "witness") {
    require(cmd.root.has_value(), cmd.subcommand + " needs --root");
  }
  if (cmd.kind) {
    require(witness_kind_from_string(*cmd.kind).has_value(), "unknown witness kind '" + *cmd.kind + "'");
  }
  require(cmd.k >= 1, "--k must be at least 1");
  require(!cmd.config_path || cmd.root.has_value(), "--config needs --root");
}

inline WitnessKind default_kind(const RootAnalysis& a) {
  switch (a.root_case) {
    case RootCase::Clique: return WitnessKind::RootKm;
    case RootCase::ConeEcc2: return WitnessKind::RootE2;
    case RootCase::ConeEcc3: return a.phoenix ? WitnessKind::C_P : witness_kind_for(a.t->dominant);
  }
  return WitnessKind::RootKm;
}

inline json run_gen(const Command& cmd) {
  if (cmd.family == "sun") return io::graph_to_json(gen_sun(cmd.n));
  if (cmd.family == "complete") return io::graph_to_json(gen_complete(cmd.n));
  if (cmd.family == "pyramid") return io::graph_to_json(gen_pyramid());
  if (cmd.family == "phoenix") return io::graph_to_json(gen_phoenix());
  return io::graph_to_json(gen_random_split(cmd.k_size, cmd.s_size, cmd.p, cmd.seed));
}

inline json run_recognize(const SplitGraph& g) {
  SplitAnalyzer an(g);
  const auto pyramid = is_pereyra(an.aux());
  json phoenix_roots = json::array();
  for (VertexId r : an.graph().independent()) {
    if (an.analyze(r).phoenix) phoenix_roots.push_back(r);
  }
  return {{"pereyra", pyramid.has_value()},
          {"phoenix_roots", std::move(phoenix_roots)},
          {"witness", pyramid ? io::pyramid_to_json(*pyramid) : json(nullptr)}};
}

inline Outcome run_witness(const Command& cmd, const SplitGraph& g, const SolveOptions& opts) {
  SplitAnalyzer an(g);
  const VertexId r = checked_root(cmd, g);
  const WitnessKind kind = cmd.kind ? *witness_kind_from_string(*cmd.kind) : default_kind(an.analyze(r));
  const auto w = witness_config(an, r, kind);
  Outcome out{kExitOk, io::witness_to_json(w, r)};
  out.report["verified"] = nullptr;
  if (cmd.verify) {
    const bool unsolvable = !is_solvable(g, w.config, r, opts);
    out.report["verified"] = unsolvable;
    if (!unsolvable) out.exit_code = kExitDomain;
  }
  return out;
}

inline json run_brute(const Command& cmd, const SplitGraph& g, SolveOptions opts) {
  opts.k = cmd.k;
  opts.rule = cmd.semigreedy ? MoveRule::Semigreedy : MoveRule::Any;
  const std::string rule = cmd.semigreedy ? "semigreedy" : "any";
  if (cmd.config_path) {
    const VertexId r = checked_root(cmd, g);
    const auto c = io::parse_configuration(io::read_file(*cmd.config_path), g.n());
    return {{"root", r}, {"k", cmd.k}, {"rule", rule}, {"size", c.size()}, {"solvable", is_solvable(g, c, r, opts)}};
  }
  if (!cmd.root) return {{"pi", brute_pi_graph(g, opts)}, {"k", cmd.k}, {"rule", rule}};
  const VertexId r = checked_root(cmd, g);
  const auto w = max_unsolvable(g, r, opts);
  return {{"pi", w.size + 1}, {"root", r}, {"k", cmd.k}, {"rule", rule}, {"max_unsolvable", w.config.counts}};
}

/// Formula-vs-oracle comparison on one graph. With --k 2 the 2-fold clique
/// formula is checked as well.
inline Outcome run_verify(const Command& cmd, const SplitGraph& g, const SolveOptions& opts) {
  SplitAnalyzer an(g);
  const auto& cg = an.graph();
  json mismatches = json::array();
  auto compare = [&](VertexId r, const char* check, long long formula, long long oracle) {
    if (formula != oracle) {
      mismatches.push_back({{"root", r}, {"check", check}, {"formula", formula}, {"oracle", oracle}});
    }
  };
  int best = 0;
  int diam = 0;
  int witnesses = 0;
  for (VertexId r = 0; r < g.n(); ++r) {
    const auto a = an.analyze(r);
    const int oracle = brute_pi(g, r, opts);
    compare(r, "pi_r", a.pi, oracle);
    best = std::max(best, a.pi);
    diam = std::max(diam, a.ecc);
    if (a.root_case == RootCase::Clique) {
      auto strategies = rootKm_strategies(cg, r);
      compare(r, "wfl_bound", wfl_bound(cg, r, strategies).value_or(-1), a.pi);
      if (cmd.k >= 2) compare(r, "pi2_r", pi2_root_clique(a, g.n()), brute_pi(g, r, SolveOptions{2, opts.rule, opts.node_budget}));
    }
    if (a.root_case == RootCase::ConeEcc3) {
      for (WitnessKind kind : {WitnessKind::C_rs, WitnessKind::C_r, WitnessKind::C_s, WitnessKind::C_0}) {
        const auto w = witness_config(an, r, kind);
        ++witnesses;
        compare(r, "witness_size", w.config.size(), w.expected_size);
        if (is_solvable(g, w.config, r, opts)) compare(r, "witness_unsolvable", 0, 1);
      }
    }
  }
  if (diam == 3) compare(-1, "closed_form", pi_diam3_closed_form(an), best);
  json report{{"ok", mismatches.empty()},
              {"roots_checked", g.n()},
              {"witnesses_checked", witnesses},
              {"pi", best},
              {"mismatches", mismatches}};
  return {mismatches.empty() ? kExitOk : kExitDomain, std::move(report)};
}

}  // namespace detail

/// Executes a parsed command. Library errors become exit codes with an
/// {"error", "detail"} report; nothing is thrown.
inline Outcome execute(const Command& cmd) {
  try {
    detail::check_arguments(cmd);
    SolveOptions opts;
    opts.node_budget = node_budget_from_env();
    if (cmd.subcommand == "gen") return {kExitOk, detail::run_gen(cmd)};

    const SplitGraph g = io::read_graph(cmd.graph_path);
    if (cmd.subcommand == "compute") return {kExitOk, io::pebbling_number_to_json(pebbling_number(g))};
    if (cmd.subcommand == "compute-root") {
      SplitAnalyzer an(g);
      return {kExitOk, io::root_analysis_to_json(an.analyze(detail::checked_root(cmd, g)))};
    }
    if (cmd.subcommand == "recognize") return {kExitOk, detail::run_recognize(g)};
    if (cmd.subcommand == "witness") return detail::run_witness(cmd, g, opts);
    if (cmd.subcommand == "brute") return {kExitOk, detail::run_brute(cmd, g, opts)};
    return detail::run_verify(cmd, g, opts);
  } catch (const UsageError& e) {
    return {kExitUsage, io::error_to_json("UsageError", e.what())};
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitDomain;
    return {code, io::error_to_json(to_string(e.code()), e.detail())};
  }
}

inline void render(const json& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    out << report.dump(2) << "\n";
  } else {
    io::render_text(report, out);
  }
}

/// Executes and writes the report; returns the exit code.
inline int run(const Command& cmd, std::ostream& out) {
  const Outcome result = execute(cmd);
  render(result.report, cmd.output, out);
  return result.exit_code;
}

/// Parses argv-style arguments (without the program name) and runs them.
inline int run_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pebbling numbers of split graphs"};
  app.require_subcommand(1);
  Command cmd;
  std::string output = "json";
  std::optional<int> root;
  std::optional<std::string> kind;
  std::optional<std::string> config;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", output, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", cmd.graph_path, "graph JSON file");
    add_common(sub);
  };

  for (const auto& name : detail::subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    if (name == "gen") {
      sub->add_option("--family", cmd.family, "sun, complete, pyramid, phoenix or random");
      sub->add_option("--n", cmd.n, "vertex count for sun and complete");
      sub->add_option("--k-size", cmd.k_size, "clique size for random");
      sub->add_option("--s-size", cmd.s_size, "cone count for random");
      sub->add_option("--p", cmd.p, "edge probability for random");
      sub->add_option("--seed", cmd.seed, "seed for random");
      add_common(sub);
      continue;
    }
    add_graph(sub);
    if (name != "compute" && name != "recognize" && name != "verify") sub->add_option("--root", root, "root vertex");
    if (name == "witness") {
      sub->add_option("--kind", kind, "C_rs, C_r, C_s, C_0, C_P, rootKm_witness or rootE2_witness");
      sub->add_flag("--verify", cmd.verify, "confirm unsolvability with the oracle");
    }
    if (name == "brute" || name == "verify") sub->add_option("--k", cmd.k, "fold (brute) or 2 to include 2-fold checks");
    if (name == "brute") {
      sub->add_flag("--semigreedy", cmd.semigreedy, "restrict to semigreedy moves");
      sub->add_option("--config", config, "configuration JSON to test for solvability");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    render(io::error_to_json("UsageError", e.what()), OutputFormat::Json, out);
    err << "run with --help for usage\n";
    return kExitUsage;
  }
  for (const auto* sub : app.get_subcommands()) cmd.subcommand = sub->get_name();
  cmd.root = root;
  cmd.kind = kind;
  cmd.config_path = config;
  cmd.output = output == "text" ? OutputFormat::Text : OutputFormat::Json;
  return run(cmd, out);
}

}  // namespace splitpeb::cli
