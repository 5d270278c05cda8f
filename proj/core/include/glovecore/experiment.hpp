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

// Replicated heuristic runs classified against brute-force cores.

#ifndef GLOVECORE_EXPERIMENT_HPP
#define GLOVECORE_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glovecore/builtin_games.hpp"
#include "glovecore/core_solver.hpp"
#include "glovecore/game.hpp"
#include "glovecore/heuristic.hpp"

namespace glovecore {

struct ExperimentConfig {
  std::vector<GameInstance> games = builtin_games();
  int replications = 50;
  // Per-run template; its seed is replaced by derive_seed().
  SimConfig sim;
  std::uint64_t base_seed = kDefaultSeed;
  std::vector<Algorithm> algorithms = {Algorithm::kSixRoutine};
  // Payoff rule of the reference cores used for classification.
  PayoffRule core_rule = PayoffRule::kExact;
  int workers = 1;
  // When set, cores are loaded from / stored to this directory.
  std::optional<std::filesystem::path> core_cache_dir;
  // Also classify each final structure with is_core_member and count
  // disagreements with the core lookup.
  bool cross_check = false;

  void validate() const;
};

// splitmix64 over (base_seed, game index, replication, algorithm).
std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t game_index, int replication,
                          Algorithm algorithm);

struct GameReport {
  std::string game_id;
  int num_players = 0;
  Algorithm algorithm = Algorithm::kSixRoutine;
  std::size_t core_size = 0;
  bool core_empty = false;
  int hits = 0;
  int replications = 0;
  int unique_core_structures_reached = 0;
  int converged_runs = 0;
  int individually_rational_failures = 0;
  int classification_disagreements = 0;
  // Canonical block notation -> number of runs that ended there.
  std::map<std::string, int> final_structures;
  // Non-empty when the core computation failed; the game then has no hits.
  std::string error;
};

struct SizeSummary {
  int num_players = 0;
  int runs = 0;
  int hits = 0;
  std::size_t core_total = 0;
  std::size_t unique_reached = 0;

  double hit_pct() const { return runs == 0 ? 0.0 : 100.0 * hits / runs; }
  std::optional<double> coverage_pct() const {
    if (core_total == 0) return std::nullopt;
    return 100.0 * static_cast<double>(unique_reached) / static_cast<double>(core_total);
  }
};

struct AlgorithmSummary {
  Algorithm algorithm = Algorithm::kSixRoutine;
  std::vector<SizeSummary> by_size;  // ascending player count
  int runs = 0;
  int hits = 0;

  double hit_pct() const { return runs == 0 ? 0.0 : 100.0 * hits / runs; }
  const SizeSummary* size(int n) const;
};

struct ExperimentSummary {
  std::vector<AlgorithmSummary> algorithms;
  std::string config_hash;
  std::string started_at;
  std::string finished_at;

  const AlgorithmSummary* find(Algorithm a) const;
};

struct ExperimentResult {
  // Ordered by algorithm (config order), then game index.
  std::vector<GameReport> reports;
  ExperimentSummary summary;
};

struct CoverageRow {
  int num_players = 0;
  std::size_t core_total = 0;
  std::size_t unique_reached = 0;
  std::optional<double> pct;  // absent when every core of this size is empty
};

// Reference core, read from or written to the cache directory when given.
CoreSet cached_core_set(const GameInstance& game, PayoffRule rule,
                        const std::optional<std::filesystem::path>& cache_dir, int workers = 1);

ExperimentResult run_experiment(const ExperimentConfig& config);

// Per player count: sum of unique core structures reached over sum of core
// sizes.
std::vector<CoverageRow> coverage_stats(std::span<const GameReport> reports);

ExperimentSummary summarize(std::span<const GameReport> reports,
                            std::span<const Algorithm> algorithms);

std::string config_hash(const ExperimentConfig& config);

std::string results_csv(std::span<const GameReport> reports);
std::string summary_csv(const ExperimentSummary& summary);

// Writes results.csv, summary.csv and run.json (metadata) into `dir`.
void write_report(const ExperimentResult& result, const std::filesystem::path& dir);

}  // namespace glovecore

#endif  // GLOVECORE_EXPERIMENT_HPP
