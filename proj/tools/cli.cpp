// Copyright 2026 The glovecore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "glovecore/builtin_games.hpp"
#include "glovecore/core_solver.hpp"
#include "glovecore/experiment.hpp"
#include "glovecore/heuristic.hpp"
#include "glovecore/io.hpp"

namespace glovecore::cli {

namespace {

// Input problems detected after flag parsing; mapped to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t game_seed(std::uint64_t seed, int index) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string payoff_row(const std::vector<Payoff>& payoffs) {
  std::string s;
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    if (i > 0) s += ' ';
    s += payoffs[i].to_string();
  }
  return s;
}

struct GenArgs {
  int n = 0;
  int count = 1;
  std::uint64_t seed = kDefaultSeed;
  int max_gloves = 9;
  std::string out;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  if (a.n < 1 || a.n > kMaxPlayers) {
    throw UsageError("--n must be in [1, " + std::to_string(kMaxPlayers) + "]");
  }
  if (a.count < 1) throw UsageError("--count must be >= 1");
  if (a.max_gloves < 0) throw UsageError("--max-gloves must be >= 0");
  std::vector<GameInstance> games;
  for (int i = 0; i < a.count; ++i) {
    games.push_back(random_game(a.n, game_seed(a.seed, i), a.max_gloves,
                                "r" + std::to_string(a.n) + "." + std::to_string(a.seed) + "." +
                                    std::to_string(i + 1)));
  }
  if (a.out.empty()) {
    out << games_to_text(games);
  } else {
    write_games(a.out, games);
    for (const auto& g : games) out << g.id() << '\n';
  }
  return kExitOk;
}

struct CoreArgs {
  std::string game;
  std::string out;
  std::string rule = "exact";
  int workers = 1;
};

int cmd_core(const CoreArgs& a, std::ostream& out) {
  const GameInstance game = resolve_game(a.game);
  const PayoffRule rule = parse_payoff_rule(a.rule);
  const CoreSet core = core_set(game, {rule, a.workers});
  out << "game " << game.id() << " (" << game.num_players() << " players, " << to_string(rule)
      << " payoffs)\n";
  out << "partitions examined: " << core.partitions_examined
      << ", coalitions examined: " << core.coalitions_examined << '\n';
  if (core.empty()) {
    out << "core is empty\n";
  } else {
    out << "core size: " << core.size() << '\n';
    for (const auto& cs : core.members) {
      out << cs.to_string() << "  payoffs: " << payoff_row(structure_payoffs(game, cs, rule))
          << '\n';
    }
  }
  if (!a.out.empty()) write_core_set(a.out, game, core);
  return kExitOk;
}

struct CheckArgs {
  std::string game;
  std::string partition;
  std::string rule = "exact";
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const GameInstance game = resolve_game(a.game);
  const PayoffRule rule = parse_payoff_rule(a.rule);
  CoalitionStructure cs;
  try {
    cs = CoalitionStructure::parse(a.partition, game.num_players());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << cs.to_string() << "  payoffs: " << payoff_row(structure_payoffs(game, cs, rule)) << '\n';
  if (auto witness = blocking_witness(game, cs, rule)) {
    out << "not in core: blocked by " << witness->to_string() << '\n';
    return kExitNegative;
  }
  out << "core member\n";
  return kExitOk;
}

struct SimArgs {
  std::string game;
  SimConfig config;
  std::string algorithm = "six";
  std::string split = "either";
  std::string rule = "exact";
  bool trace = false;
};

int cmd_sim(SimArgs a, std::ostream& out) {
  const GameInstance game = resolve_game(a.game);
  a.config.algorithm = parse_algorithm(a.algorithm);
  a.config.rule = parse_payoff_rule(a.rule);
  if (a.split == "either") {
    a.config.split_rule = SplitRule::kEither;
  } else if (a.split == "both") {
    a.config.split_rule = SplitRule::kBoth;
  } else {
    throw UsageError("--split must be either or both");
  }
  try {
    a.config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  TraceFn trace;
  if (a.trace) {
    trace = [&out](std::int64_t step, Routine r, const Formation& f) {
      out << format_trace_line(step, r, f) << '\n';
    };
  }
  const RunResult r = run(game, a.config, trace);
  out << "final: " << r.final.to_string() << '\n';
  out << "payoffs: " << payoff_row(r.final_payoffs) << '\n';
  out << "steps: " << r.steps_executed << '\n';
  out << "accepted moves: " << r.accepted_moves << '\n';
  out << "converged early: " << (r.converged_early ? "yes" : "no") << '\n';
  // Core membership needs only the 2^n coalitions, never the partitions.
  if (auto witness = blocking_witness(game, r.final, a.config.rule)) {
    out << "core: no (blocked by " << witness->to_string() << ")\n";
  } else {
    out << "core: yes\n";
  }
  return kExitOk;
}

struct ExperimentArgs {
  std::string games = "builtin";
  int replications = 50;
  std::uint64_t base_seed = kDefaultSeed;
  std::string algorithms = "six";
  std::string out_dir;
  std::int64_t max_steps = 100000;
  std::int64_t stability_window = 0;
  std::string core_rule = "exact";
  std::string core_cache;
  int workers = 0;
};

int cmd_experiment(const ExperimentArgs& a, std::ostream& out) {
  ExperimentConfig config;
  config.games = resolve_games(a.games);
  config.replications = a.replications;
  config.base_seed = a.base_seed;
  config.sim.max_steps = a.max_steps;
  config.sim.stability_window = a.stability_window;
  config.core_rule = parse_payoff_rule(a.core_rule);
  config.algorithms.clear();
  std::stringstream ss(a.algorithms);
  for (std::string item; std::getline(ss, item, ',');) {
    const Algorithm alg = parse_algorithm(item);
    if (std::ranges::find(config.algorithms, alg) == config.algorithms.end()) {
      config.algorithms.push_back(alg);
    }
  }
  config.workers = a.workers > 0 ? a.workers
                                 : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  if (!a.core_cache.empty()) config.core_cache_dir = a.core_cache;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const ExperimentResult result = run_experiment(config);

  out << std::left << std::setw(4) << "n";
  for (const auto& alg : result.summary.algorithms) {
    const std::string p(to_string(alg.algorithm));
    out << std::setw(14) << (p + "_hits") << std::setw(12) << (p + "_pct") << std::setw(16)
        << (p + "_coverage");
  }
  out << '\n';
  const auto& first = result.summary.algorithms.front();
  for (const auto& row0 : first.by_size) {
    out << std::setw(4) << row0.num_players;
    for (const auto& alg : result.summary.algorithms) {
      const SizeSummary* row = alg.size(row0.num_players);
      std::ostringstream pct, cov;
      pct << std::fixed << std::setprecision(1) << row->hit_pct();
      if (auto c = row->coverage_pct()) {
        cov << std::fixed << std::setprecision(1) << *c << "% (" << row->unique_reached << '/'
            << row->core_total << ')';
      } else {
        cov << "NA";
      }
      out << std::setw(14) << (std::to_string(row->hits) + "/" + std::to_string(row->runs))
          << std::setw(12) << pct.str() << std::setw(16) << cov.str();
    }
    out << '\n';
  }
  for (const auto& alg : result.summary.algorithms) {
    out << "overall " << to_string(alg.algorithm) << ": " << alg.hits << '/' << alg.runs << " ("
        << std::fixed << std::setprecision(1) << alg.hit_pct() << "%)\n";
  }
  for (const auto& r : result.reports) {
    if (!r.error.empty()) out << "error in " << r.game_id << ": " << r.error << '\n';
  }
  if (!a.out_dir.empty()) {
    write_report(result, a.out_dir);
    out << "wrote " << (std::filesystem::path(a.out_dir) / "results.csv").string() << " and "
        << (std::filesystem::path(a.out_dir) / "summary.csv").string() << '\n';
  }
  return kExitOk;
}

}  // namespace

GameInstance resolve_game(const std::string& spec) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (spec.starts_with(kBuiltin)) {
    const std::string id = spec.substr(kBuiltin.size());
    if (auto g = builtin_game(id)) return *g;
    throw UsageError("no built-in game " + id + " (expected gN.M with N in 3..9, M in 1..10)");
  }
  std::string path = spec;
  std::string id;
  if (auto hash = spec.rfind('#'); hash != std::string::npos) {
    path = spec.substr(0, hash);
    id = spec.substr(hash + 1);
  }
  std::vector<GameInstance> games;
  try {
    games = read_games(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (!id.empty()) {
    auto it = std::ranges::find(games, id, &GameInstance::id);
    if (it == games.end()) throw UsageError(path + " has no game " + id);
    return *it;
  }
  if (games.size() != 1) {
    throw UsageError(path + " holds " + std::to_string(games.size()) +
                     " games; select one with " + path + "#<id>");
  }
  return games.front();
}

std::vector<GameInstance> resolve_games(const std::string& spec) {
  if (spec == "builtin") return builtin_games();
  try {
    return read_games(spec);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core-stable coalition structures of hedonic glove games", "glovecore"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random glove games");
  gen_cmd->add_option("--n", gen.n, "Player count")->required();
  gen_cmd->add_option("--count", gen.count, "Number of games")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--max-gloves", gen.max_gloves, "Largest endowment per glove side")
      ->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output game file (default: stdout)");

  CoreArgs core;
  auto* core_cmd = app.add_subcommand("core", "Compute the core by brute force");
  core_cmd->add_option("--game", core.game, "builtin:gN.M or a game file")->required();
  core_cmd->add_option("--out", core.out, "Write a core-set file");
  core_cmd->add_option("--rule", core.rule, "Payoff rule: exact or truncated")
      ->capture_default_str();
  core_cmd->add_option("--workers", core.workers, "Threads")->capture_default_str();

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Test a coalition structure for core membership");
  check_cmd->add_option("--game", check.game, "builtin:gN.M or a game file")->required();
  check_cmd->add_option("--partition", check.partition, "Blocks, e.g. \"(0,5)(1)(2,3,4)\"")
      ->required();
  check_cmd->add_option("--rule", check.rule, "Payoff rule: exact or truncated")
      ->capture_default_str();

  SimArgs sim;
  auto* sim_cmd = app.add_subcommand("sim", "Run the coalition-formation heuristic once");
  sim_cmd->add_option("--game", sim.game, "builtin:gN.M or a game file")->required();
  sim_cmd->add_option("--seed", sim.config.seed, "RNG seed")->capture_default_str();
  sim_cmd->add_option("--max-steps", sim.config.max_steps, "Step budget")->capture_default_str();
  sim_cmd->add_option("--stability-window", sim.config.stability_window,
                      "Stop after this many idle steps (0: never)")
      ->capture_default_str();
  sim_cmd->add_option("--algorithm", sim.algorithm, "six or cf")->capture_default_str();
  sim_cmd->add_option("--split", sim.split, "Split acceptance: either or both")
      ->capture_default_str();
  sim_cmd->add_option("--rule", sim.rule, "Payoff rule: exact or truncated")
      ->capture_default_str();
  sim_cmd->add_flag("--trace", sim.trace, "Print one line per accepted move");

  ExperimentArgs exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Replicate runs over a game suite");
  exp_cmd->add_option("--games", exp.games, "builtin or a game file")->capture_default_str();
  exp_cmd->add_option("--replications", exp.replications, "Runs per game")->capture_default_str();
  exp_cmd->add_option("--base-seed", exp.base_seed, "Seed all run seeds derive from")
      ->capture_default_str();
  exp_cmd->add_option("--algorithms", exp.algorithms, "Comma list of six,cf")
      ->capture_default_str();
  exp_cmd->add_option("--out-dir", exp.out_dir, "Directory for results.csv and summary.csv");
  exp_cmd->add_option("--max-steps", exp.max_steps, "Step budget per run")->capture_default_str();
  exp_cmd->add_option("--stability-window", exp.stability_window,
                      "Stop a run after this many idle steps (0: never)")
      ->capture_default_str();
  exp_cmd->add_option("--core-rule", exp.core_rule, "Payoff rule of the reference cores")
      ->capture_default_str();
  exp_cmd->add_option("--core-cache", exp.core_cache, "Directory caching core-set files");
  exp_cmd->add_option("--workers", exp.workers, "Threads (0: all cores)")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*core_cmd) return cmd_core(core, out);
    if (*check_cmd) return cmd_check(check, out);
    if (*sim_cmd) return cmd_sim(sim, out);
    if (*exp_cmd) return cmd_experiment(exp, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace glovecore::cli
