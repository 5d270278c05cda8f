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

#include "glovecore/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "glovecore/io.hpp"

namespace glovecore {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream ss;
  ss << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return ss.str();
}

std::string decimal(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct RunOutcome {
  CoalitionStructure final;
  bool hit = false;
  bool converged = false;
  bool individually_rational = true;
  bool disagreement = false;
};

bool individually_rational(const CoalitionValues& values, const CoalitionStructure& cs) {
  for (int i = 0; i < cs.num_players(); ++i) {
    if (values.better(Mask{1} << i, cs.block_of(i).mask())) return false;
  }
  return true;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (algorithms.empty()) throw std::invalid_argument("at least one algorithm is required");
  sim.validate();
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t game_index, int replication,
                          Algorithm algorithm) {
  std::uint64_t h = splitmix(base_seed);
  h = splitmix(h ^ static_cast<std::uint64_t>(game_index));
  h = splitmix(h ^ static_cast<std::uint64_t>(replication));
  h = splitmix(h ^ static_cast<std::uint64_t>(algorithm == Algorithm::kBaseline ? 1 : 0));
  return h;
}

const SizeSummary* AlgorithmSummary::size(int n) const {
  auto it = std::ranges::find(by_size, n, &SizeSummary::num_players);
  return it == by_size.end() ? nullptr : &*it;
}

const AlgorithmSummary* ExperimentSummary::find(Algorithm a) const {
  auto it = std::ranges::find(algorithms, a, &AlgorithmSummary::algorithm);
  return it == algorithms.end() ? nullptr : &*it;
}

CoreSet cached_core_set(const GameInstance& game, PayoffRule rule,
                        const std::optional<std::filesystem::path>& cache_dir, int workers) {
  if (!cache_dir) return core_set(game, {rule, workers});
  char name[64];
  std::snprintf(name, sizeof name, "core-%s-%016llx.json", std::string(to_string(rule)).c_str(),
                static_cast<unsigned long long>(instance_hash(game)));
  const auto path = *cache_dir / name;
  if (std::filesystem::exists(path)) {
    CoreSet cached = read_core_set(path, game);
    if (cached.rule == rule) return cached;
  }
  CoreSet core = core_set(game, {rule, workers});
  std::filesystem::create_directories(*cache_dir);
  write_core_set(path, game, core);
  return core;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResult result;
  result.summary.started_at = utc_now();

  const std::size_t num_games = config.games.size();
  const int reps = config.replications;
  const int workers = std::max(1, config.workers);

  // Reference cores, once per game.
  std::vector<std::optional<CoreSet>> cores(num_games);
  std::vector<std::string> errors(num_games);
  std::vector<std::unordered_set<CoalitionStructure>> lookup(num_games);
  for (std::size_t g = 0; g < num_games; ++g) {
    try {
      cores[g] = cached_core_set(config.games[g], config.core_rule, config.core_cache_dir, workers);
      lookup[g].insert(cores[g]->members.begin(), cores[g]->members.end());
    } catch (const std::exception& e) {
      errors[g] = e.what();
    }
  }

  struct Job {
    std::size_t algorithm;
    std::size_t game;
    int replication;
  };
  std::vector<Job> jobs;
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    for (std::size_t g = 0; g < num_games; ++g) {
      if (!cores[g]) continue;
      for (int r = 0; r < reps; ++r) jobs.push_back({a, g, r});
    }
  }

  std::vector<RunOutcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const Job& job = jobs[k];
      const GameInstance& game = config.games[job.game];
      SimConfig sim = config.sim;
      sim.algorithm = config.algorithms[job.algorithm];
      sim.seed = derive_seed(config.base_seed, job.game, job.replication, sim.algorithm);
      RunResult run_result = run(game, sim);
      RunOutcome& out = outcomes[k];
      out.final = std::move(run_result.final);
      out.hit = lookup[job.game].contains(out.final);
      out.converged = run_result.converged_early;
      const CoalitionValues values(game, config.core_rule);
      out.individually_rational = individually_rational(values, out.final);
      if (config.cross_check) {
        out.disagreement = blocking_witness(values, out.final).has_value() == out.hit;
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  // Deterministic reduction in job order.
  std::size_t k = 0;
  for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
    for (std::size_t g = 0; g < num_games; ++g) {
      const GameInstance& game = config.games[g];
      GameReport report;
      report.game_id = game.id();
      report.num_players = game.num_players();
      report.algorithm = config.algorithms[a];
      report.replications = reps;
      if (!cores[g]) {
        report.error = errors[g];
        report.core_empty = true;
        result.reports.push_back(std::move(report));
        continue;
      }
      report.core_size = cores[g]->size();
      report.core_empty = cores[g]->empty();
      std::set<CoalitionStructure> reached;
      for (int r = 0; r < reps; ++r, ++k) {
        const RunOutcome& out = outcomes[k];
        ++report.final_structures[out.final.to_string()];
        if (out.hit) {
          ++report.hits;
          reached.insert(out.final);
        }
        if (out.converged) {
          ++report.converged_runs;
          if (!out.individually_rational) ++report.individually_rational_failures;
        }
        if (out.disagreement) ++report.classification_disagreements;
      }
      report.unique_core_structures_reached = static_cast<int>(reached.size());
      result.reports.push_back(std::move(report));
    }
  }

  result.summary = [&] {
    ExperimentSummary s = summarize(result.reports, config.algorithms);
    s.started_at = result.summary.started_at;
    return s;
  }();
  result.summary.config_hash = config_hash(config);
  result.summary.finished_at = utc_now();
  return result;
}

std::vector<CoverageRow> coverage_stats(std::span<const GameReport> reports) {
  std::map<int, CoverageRow> rows;
  for (const GameReport& r : reports) {
    CoverageRow& row = rows[r.num_players];
    row.num_players = r.num_players;
    row.core_total += r.core_size;
    row.unique_reached += static_cast<std::size_t>(r.unique_core_structures_reached);
  }
  std::vector<CoverageRow> out;
  for (auto& [n, row] : rows) {
    if (row.core_total > 0) {
      row.pct = 100.0 * static_cast<double>(row.unique_reached) /
                static_cast<double>(row.core_total);
    }
    out.push_back(row);
  }
  return out;
}

ExperimentSummary summarize(std::span<const GameReport> reports,
                            std::span<const Algorithm> algorithms) {
  ExperimentSummary s;
  for (Algorithm a : algorithms) {
    AlgorithmSummary as;
    as.algorithm = a;
    std::map<int, SizeSummary> sizes;
    for (const GameReport& r : reports) {
      if (r.algorithm != a) continue;
      SizeSummary& row = sizes[r.num_players];
      row.num_players = r.num_players;
      row.runs += r.replications;
      row.hits += r.hits;
      row.core_total += r.core_size;
      row.unique_reached += static_cast<std::size_t>(r.unique_core_structures_reached);
    }
    for (const auto& [n, row] : sizes) {
      as.by_size.push_back(row);
      as.runs += row.runs;
      as.hits += row.hits;
    }
    s.algorithms.push_back(std::move(as));
  }
  return s;
}

std::string config_hash(const ExperimentConfig& config) {
  std::ostringstream ss;
  ss << "reps=" << config.replications << ";base=" << config.base_seed
     << ";steps=" << config.sim.max_steps << ";window=" << config.sim.stability_window
     << ";split=" << (config.sim.split_rule == SplitRule::kEither ? "either" : "both")
     << ";simrule=" << to_string(config.sim.rule) << ";corerule=" << to_string(config.core_rule)
     << ";alg=";
  for (Algorithm a : config.algorithms) ss << to_string(a) << ',';
  ss << ";games=";
  for (const auto& g : config.games) ss << g.id() << ':' << instance_hash(g) << ',';
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : ss.str()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string results_csv(std::span<const GameReport> reports) {
  std::ostringstream ss;
  ss << "algorithm,id,n,core_size,core_empty,hits,replications,hit_fraction,hit_decimal,"
        "unique_reached,converged_runs,error\n";
  for (const GameReport& r : reports) {
    ss << to_string(r.algorithm) << ',' << r.game_id << ',' << r.num_players << ','
       << r.core_size << ',' << (r.core_empty ? "true" : "false") << ',' << r.hits << ','
       << r.replications << ',' << r.hits << '/' << r.replications << ','
       << decimal(static_cast<double>(r.hits) / r.replications) << ','
       << r.unique_core_structures_reached << ',' << r.converged_runs << ',';
    std::string err = r.error;
    std::ranges::replace(err, ',', ';');
    std::ranges::replace(err, '\n', ' ');
    ss << err << '\n';
  }
  return ss.str();
}

std::string summary_csv(const ExperimentSummary& summary) {
  std::set<int> sizes;
  for (const auto& a : summary.algorithms) {
    for (const auto& row : a.by_size) sizes.insert(row.num_players);
  }
  std::ostringstream ss;
  ss << 'n';
  for (const auto& a : summary.algorithms) {
    const std::string p(to_string(a.algorithm));
    ss << ',' << p << "_hit_fraction," << p << "_hit_pct," << p << "_coverage_fraction," << p
       << "_coverage_pct";
  }
  ss << '\n';
  for (int n : sizes) {
    ss << n;
    for (const auto& a : summary.algorithms) {
      const SizeSummary* row = a.size(n);
      if (row == nullptr) {
        ss << ",,,,";
        continue;
      }
      ss << ',' << row->hits << '/' << row->runs << ',' << decimal(row->hit_pct()) << ','
         << row->unique_reached << '/' << row->core_total << ','
         << (row->coverage_pct() ? decimal(*row->coverage_pct()) : std::string("NA"));
    }
    ss << '\n';
  }
  return ss.str();
}

void write_report(const ExperimentResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  write_text(dir / "results.csv", results_csv(result.reports));
  write_text(dir / "summary.csv", summary_csv(result.summary));
  nlohmann::json meta;
  meta["config_hash"] = result.summary.config_hash;
  meta["started_at"] = result.summary.started_at;
  meta["finished_at"] = result.summary.finished_at;
  for (const auto& a : result.summary.algorithms) {
    meta["overall_hit_pct"][std::string(to_string(a.algorithm))] = a.hit_pct();
  }
  write_text(dir / "run.json", meta.dump(2) + "\n");
}

}  // namespace glovecore
