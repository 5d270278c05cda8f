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

// Acceptance suite: one PASS/FAIL line per criterion, every tolerance pinned
// below. Exit status is the number of failed lines.

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "glovecore/builtin_games.hpp"
#include "glovecore/core_solver.hpp"
#include "glovecore/experiment.hpp"
#include "glovecore/partition.hpp"
#include "oracles.hpp"

using namespace glovecore;

namespace {

// Pinned tolerances.
constexpr double kBellSeconds = 5.0;
constexpr double kExampleSeconds = 10.0;
constexpr double kFixedPointSeconds = 1.0;
constexpr double kReducedSeconds = 60.0;
constexpr double kSmallHitPct = 98.0;
constexpr double kOverallHitPct = 90.0;
constexpr double kEightLowPct = 60.0;
constexpr double kEightHighPct = 90.0;
constexpr std::size_t kSixPlayerCores = 61;
constexpr std::size_t kSevenPlayerCores = 174;

int failures = 0;

void report(const std::string& id, bool ok, const std::string& detail) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<GameInstance> games_of_size(std::initializer_list<int> sizes) {
  std::vector<GameInstance> out;
  for (const auto& g : builtin_games()) {
    for (int n : sizes) {
      if (g.num_players() == n) out.push_back(g);
    }
  }
  return out;
}

std::string vector_text(const std::vector<Payoff>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

std::vector<Payoff> ints(std::initializer_list<int> xs) {
  std::vector<Payoff> out;
  for (int x : xs) out.emplace_back(x, 1);
  return out;
}

void partition_counts() {
  Stopwatch t;
  bool ok = true;
  std::string counts;
  for (int n = 1; n <= 10; ++n) {
    std::uint64_t c = 0;
    for (const auto& cs : all_partitions(n)) {
      (void)cs;
      ++c;
    }
    ok = ok && c == oracle::bell(n) && c == bell_number(n);
    counts += (n > 1 ? "," : "") + std::to_string(c);
  }
  ok = ok && bell_number(15) == 1382958545ull && bell_number(15) > 1300000000ull;
  const double s = t.seconds();
  report("1 partition counts", ok && s < kBellSeconds,
         fmt("n=1..10 -> %s; Bell(15)=%llu; %.2fs (limit %.0fs)", counts.c_str(),
             static_cast<unsigned long long>(bell_number(15)), s, kBellSeconds));
}

void eight_player_example() {
  Stopwatch t;
  const GameInstance& g = *builtin_game("g8.1");
  const bool endowments = std::vector<int>(g.left().begin(), g.left().end()) ==
                              std::vector<int>{0, 2, 9, 0, 6, 2, 3, 7} &&
                          std::vector<int>(g.right().begin(), g.right().end()) ==
                              std::vector<int>{4, 4, 4, 8, 3, 1, 5, 9};
  const CoreSet core = core_set(g);
  struct Row {
    const char* partition;
    std::vector<Payoff> printed;
  };
  const std::vector<Row> rows = {
      {"(0,5)(1)(2,3,4)(6)(7)", ints({1, 2, 5, 5, 5, 1, 3, 7})},
      {"(0)(1)(2,3,4)(5)(6)(7)", ints({0, 2, 5, 5, 5, 1, 3, 7})},
      {"(0)(1,5)(2,3,4)(6)(7)", ints({0, 2, 5, 5, 5, 1, 3, 7})},
  };
  bool contained = endowments;
  std::string bad;
  for (const Row& r : rows) {
    const auto cs = CoalitionStructure::parse(r.partition, 8);
    contained = contained && core.contains(cs);
    const auto actual = structure_payoffs(g, cs);
    if (actual != r.printed) {
      bad += std::string(r.partition) + " computes " + vector_text(actual) + " vs printed " +
             vector_text(r.printed) + "; ";
    }
  }
  const auto achieved = CoalitionStructure::parse("(0)(1,4)(2,6)(3)(5)(7)", 8);
  const auto witness = blocking_witness(g, achieved);
  const bool blocked = !core.contains(achieved) && witness && *witness == Coalition(0b11100);
  const std::vector<Payoff> achieved_printed = {{0, 1}, {7, 2}, {9, 2}, {0, 1},
                                                {7, 2}, {1, 1}, {9, 2}, {7, 1}};
  const bool achieved_vector = structure_payoffs(g, achieved) == achieved_printed;
  const double s = t.seconds();
  report("2a eight-player example core members and blocking witness",
         contained && blocked && achieved_vector && s < kExampleSeconds,
         fmt("3/3 listed structures in core: %s; core size %zu; achieved structure blocked by %s; "
             "achieved payoffs %s; %.2fs (limit %.0fs)",
             contained ? "yes" : "no", core.size(),
             witness ? witness->to_string().c_str() : "nothing",
             vector_text(structure_payoffs(g, achieved)).c_str(), s, kExampleSeconds));
  report("2b eight-player example printed payoff vectors", bad.empty(),
         bad.empty() ? std::string("all three vectors match exactly")
                     : bad + "player 5 in (1,5) receives min(4,5)/2 = 2");
}

void local_maximum() {
  Stopwatch t;
  const GameInstance& g = *builtin_game("g8.1");
  const Formation f(CoalitionStructure::parse("(0)(1,4)(2,6)(3)(5)(7)", 8));
  const CoalitionValues v(g);
  const auto either = available_moves(v, f, SplitRule::kEither);
  const auto both = available_moves(v, f, SplitRule::kBoth);
  const double s = t.seconds();
  report("3 local maximum admits no move", either.empty() && both.empty() && s < kFixedPointSeconds,
         fmt("accepted moves over all selections: %zu (either split), %zu (both split); "
             "%.3fs (limit %.0fs)",
             either.size(), both.size(), s, kFixedPointSeconds));
}

ExperimentConfig paper_profile(std::vector<GameInstance> games) {
  ExperimentConfig c;
  c.games = std::move(games);
  c.replications = 50;
  c.sim.max_steps = 100000;
  c.sim.stability_window = 0;
  c.algorithms = {Algorithm::kSixRoutine, Algorithm::kBaseline};
  return c;
}

void small_sizes() {
  auto check = [](const std::string& label, ExperimentConfig c, double limit) {
    Stopwatch t;
    c.algorithms = {Algorithm::kSixRoutine};
    const auto r = run_experiment(c);
    const double s = t.seconds();
    std::string detail;
    bool ok = limit <= 0 || s < limit;
    std::string worst;
    double worst_pct = 101.0;
    for (const auto& rep : r.reports) {
      const double pct = 100.0 * rep.hits / rep.replications;
      ok = ok && rep.error.empty() && pct >= kSmallHitPct;
      if (pct < worst_pct) {
        worst_pct = pct;
        worst = rep.game_id;
      }
    }
    const auto* six = r.summary.find(Algorithm::kSixRoutine);
    detail = fmt("n=3 %d/%d, n=4 %d/%d; lowest game %s %.1f%% (bar %.0f%%); %.2fs",
                 six->size(3)->hits, six->size(3)->runs, six->size(4)->hits, six->size(4)->runs,
                 worst.empty() ? "-" : worst.c_str(), worst_pct, kSmallHitPct, s);
    if (limit > 0) detail += fmt(" (limit %.0fs)", limit);
    report(label, ok, detail);
  };
  check("4a small-size hit rates, full profile", paper_profile(games_of_size({3, 4})), 0);
  ExperimentConfig reduced = paper_profile(games_of_size({3, 4}));
  reduced.sim.max_steps = 10000;
  reduced.sim.stability_window = 1000;
  check("4b small-size hit rates, reduced profile", reduced, kReducedSeconds);
}

void overall(const ExperimentResult& one, double s) {
  const auto* six = one.summary.find(Algorithm::kSixRoutine);
  const auto* cf = one.summary.find(Algorithm::kBaseline);
  bool errors = false;
  for (const auto& rep : one.reports) errors = errors || !rep.error.empty();

  std::string sizes;
  for (const auto& row : six->by_size) {
    sizes += fmt("n=%d %d/%d; ", row.num_players, row.hits, row.runs);
  }
  const double eight = six->size(8)->hit_pct();
  report("5 overall hit rate",
         !errors && six->hit_pct() >= kOverallHitPct && eight >= kEightLowPct &&
             eight <= kEightHighPct,
         fmt("overall %d/%d = %.1f%% (bar %.0f%%); 8 players %.1f%% (band [%.0f, %.0f]); %s%.2fs",
             six->hits, six->runs, six->hit_pct(), kOverallHitPct, eight, kEightLowPct,
             kEightHighPct, sizes.c_str(), s));

}

void baseline(const ExperimentResult& one) {
  const auto* six = one.summary.find(Algorithm::kSixRoutine);
  const auto* cf = one.summary.find(Algorithm::kBaseline);
  std::string cf_sizes;
  for (const auto& row : cf->by_size) {
    cf_sizes += fmt("n=%d %.1f%%; ", row.num_players, row.hit_pct());
  }
  report("7 baseline below six-routine", cf->hit_pct() < six->hit_pct(),
         fmt("baseline %d/%d = %.1f%% vs six-routine %.1f%%; baseline %s", cf->hits, cf->runs,
             cf->hit_pct(), six->hit_pct(), cf_sizes.c_str()));

}

void determinism(const ExperimentResult& one) {
  ExperimentConfig c = paper_profile(builtin_games());
  c.workers = 3;
  const auto three = run_experiment(c);
  c.workers = 1;
  const auto again = run_experiment(c);
  const bool same = results_csv(one.reports) == results_csv(three.reports) &&
                    summary_csv(one.summary) == summary_csv(three.summary) &&
                    results_csv(one.reports) == results_csv(again.reports) &&
                    summary_csv(one.summary) == summary_csv(again.summary);
  report("8 determinism", same,
         fmt("results.csv (%zu bytes) and summary.csv identical across workers 1, 3 and a rerun",
             results_csv(one.reports).size()));
}

void coverage(const ExperimentResult& r) {
  for (Algorithm alg : {Algorithm::kSixRoutine, Algorithm::kBaseline}) {
    std::vector<GameReport> mine;
    for (const auto& rep : r.reports) {
      if (rep.algorithm == alg) mine.push_back(rep);
    }
    std::string cov;
    std::size_t reached = 0, total = 0;
    for (const auto& row : coverage_stats(mine)) {
      cov += fmt("n=%d %zu/%zu; ", row.num_players, row.unique_reached, row.core_total);
      reached += row.unique_reached;
      total += row.core_total;
    }
    std::printf("       exact-core coverage, %s: %soverall %zu/%zu (%.1f%%)\n",
                std::string(to_string(alg)).c_str(), cov.c_str(), reached, total,
                100.0 * static_cast<double>(reached) / static_cast<double>(total));
  }
}

void oracle_equivalence() {
  const auto games = games_of_size({1, 2, 3, 4, 5});
  std::size_t runs = 0, disagreements = 0, oracle_mismatch = 0;
  for (std::size_t gi = 0; gi < games.size(); ++gi) {
    const GameInstance& g = games[gi];
    const CoreSet core = core_set(g);
    const auto reference = oracle::core(g);
    std::set<oracle::Blocks> mine;
    for (const auto& cs : core.members) mine.insert(oracle::to_blocks(cs));
    if (mine != reference) ++oracle_mismatch;
    for (Algorithm alg : {Algorithm::kSixRoutine, Algorithm::kBaseline}) {
      for (int rep = 0; rep < 50; ++rep) {
        SimConfig sc;
        sc.max_steps = 100000;
        sc.stability_window = 0;
        sc.algorithm = alg;
        sc.seed = derive_seed(kDefaultSeed, gi, rep, alg);
        const auto r = run(g, sc);
        ++runs;
        if (is_core_member(g, r.final) != core.contains(r.final)) ++disagreements;
      }
    }
  }
  bool generator = true;
  for (int n = 1; n <= 4; ++n) {
    std::vector<oracle::Blocks> mine;
    for (const auto& cs : all_partitions(n)) mine.push_back(oracle::to_blocks(cs));
    const auto reference = oracle::partitions(n);
    generator = generator && mine.size() == reference.size() &&
                std::set<oracle::Blocks>(mine.begin(), mine.end()) ==
                    std::set<oracle::Blocks>(reference.begin(), reference.end());
  }
  report("6 oracle equivalence", disagreements == 0 && oracle_mismatch == 0 && generator,
         fmt("%zu runs over %zu games with n<=5: %zu classification disagreements; "
             "%zu core sets differ from the reference; partitions n<=4 %s",
             runs, games.size(), disagreements, oracle_mismatch,
             generator ? "identical" : "differ"));
}

void coverage_report() {
  auto totals = [](PayoffRule rule) {
    ExperimentConfig c = paper_profile(builtin_games());
    c.core_rule = rule;
    c.sim.rule = PayoffRule::kExact;
    c.algorithms = {Algorithm::kSixRoutine};
    return run_experiment(c);
  };
  const auto truncated = totals(PayoffRule::kTruncated);
  const auto exact = totals(PayoffRule::kExact);
  auto row = [](const ExperimentResult& r, int n) {
    for (const auto& c : coverage_stats(r.reports)) {
      if (c.num_players == n) return c;
    }
    return CoverageRow{};
  };
  const auto t6 = row(truncated, 6), t7 = row(truncated, 7);
  const auto e6 = row(exact, 6), e7 = row(exact, 7);
  report("9 core totals for 6 and 7 players",
         t6.core_total == kSixPlayerCores && t7.core_total == kSevenPlayerCores,
         fmt("truncated shares: %zu and %zu (expected %zu and %zu); exact shares: %zu and %zu",
             t6.core_total, t7.core_total, kSixPlayerCores, kSevenPlayerCores, e6.core_total,
             e7.core_total));
  auto pct = [](const CoverageRow& c) { return c.pct.value_or(0.0); };
  std::printf("       coverage, six-routine: exact cores n=6 %zu/%zu (%.1f%%), n=7 %zu/%zu (%.1f%%); "
              "truncated cores n=6 %zu/%zu (%.1f%%), n=7 %zu/%zu (%.1f%%)\n",
              e6.unique_reached, e6.core_total, pct(e6), e7.unique_reached, e7.core_total,
              pct(e7), t6.unique_reached, t6.core_total, pct(t6), t7.unique_reached,
              t7.core_total, pct(t7));
}

}  // namespace

int main() {
  partition_counts();
  eight_player_example();
  local_maximum();
  small_sizes();
  Stopwatch t;
  const auto suite = run_experiment(paper_profile(builtin_games()));
  overall(suite, t.seconds());
  oracle_equivalence();
  baseline(suite);
  determinism(suite);
  coverage_report();
  coverage(suite);
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
