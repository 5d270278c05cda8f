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

// Stochastic agent-based coalition formation.
//
// Every accepted move forms one new coalition C: its members leave their
// current blocks and whatever remains of those blocks stays together. The
// routines differ only in how C is proposed and whose consent is required.

#ifndef GLOVECORE_HEURISTIC_HPP
#define GLOVECORE_HEURISTIC_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "glovecore/game.hpp"

namespace glovecore {

enum class Algorithm { kSixRoutine, kBaseline };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view text);  // "six" or "cf"

enum class Routine {
  kJoin,
  kExit,
  kPair,
  kDefect,
  kSplit,
  kIndividual,
  // Baseline routines.
  kMerge,
  kBreakaway,
};

std::string_view to_string(Routine r);

// Acceptance test for the split routine. kEither accepts when the breakaway
// side or the remaining side strictly improves; kBoth needs both.
enum class SplitRule { kEither, kBoth };

inline constexpr std::uint64_t kDefaultSeed = 20190101;

struct SimConfig {
  std::int64_t max_steps = 100000;
  // Stop after this many consecutive steps without an accepted move; 0 runs
  // the full max_steps.
  std::int64_t stability_window = 10000;
  std::uint64_t seed = kDefaultSeed;
  Algorithm algorithm = Algorithm::kSixRoutine;
  SplitRule split_rule = SplitRule::kEither;
  PayoffRule rule = PayoffRule::kExact;
  // End the run once no selection of any routine can be accepted. The final
  // structure is the same as running out the budget; only steps_executed
  // differs.
  bool stop_at_fixed_point = true;

  // Throws std::invalid_argument on out-of-range fields.
  void validate() const;
};

// Mutable partition used during a run. Block order is arbitrary; use
// structure() for a canonical value.
class Formation {
 public:
  explicit Formation(int n);
  explicit Formation(const CoalitionStructure& cs);

  int num_players() const { return static_cast<int>(owner_.size()); }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  Mask block(int index) const { return blocks_[index]; }
  int index_of(int player) const { return owner_[player]; }
  Mask block_of(int player) const { return blocks_[owner_[player]]; }

  // Makes c a block. Its members leave their blocks; emptied blocks vanish.
  void form(Mask c);

  CoalitionStructure structure() const;

 private:
  std::vector<Mask> blocks_;
  std::vector<int> owner_;
};

// True iff every member of c strictly prefers c to its block in f.
bool all_improve(const CoalitionValues& values, const Formation& f, Mask c);

// Deterministic evaluation of one routine for an explicit selection. Each
// returns the coalition to form if the move is accepted.
namespace moves {

std::optional<Mask> join(const CoalitionValues& v, const Formation& f, int a, int b);
std::optional<Mask> exit(const CoalitionValues& v, const Formation& f, int agent);
std::optional<Mask> pair(const CoalitionValues& v, const Formation& f, int a, int b);
std::optional<Mask> defect(const CoalitionValues& v, const Formation& f, int agent,
                           int target_block);
// `breakaway` must be a proper non-empty subset of the block.
std::optional<Mask> split(const CoalitionValues& v, const Formation& f, int block,
                          Mask breakaway, SplitRule rule);
std::optional<Mask> individual(const CoalitionValues& v, const Formation& f, int agent);
std::optional<Mask> merge(const CoalitionValues& v, const Formation& f, int agent,
                          int other_block);
// `subset` contains the agent and is a proper subset of the agent's block.
std::optional<Mask> breakaway(const CoalitionValues& v, const Formation& f, int agent,
                              Mask subset);

}  // namespace moves

struct Move {
  Routine routine;
  Mask formed;
  friend bool operator==(const Move&, const Move&) = default;
};

// Every accepted move over all possible selections of the six routines.
std::vector<Move> available_moves(const CoalitionValues& values, const Formation& f,
                                  SplitRule rule = SplitRule::kEither);
// Same for the baseline's merge and breakaway routines.
std::vector<Move> available_baseline_moves(const CoalitionValues& values, const Formation& f);

// True iff no selection of the algorithm's routines is accepted in f.
bool is_fixed_point(const CoalitionValues& values, const Formation& f, Algorithm algorithm,
                    SplitRule rule = SplitRule::kEither);

struct SimState {
  Formation current;
  std::int64_t step = 0;
  std::int64_t last_change_step = 0;
  std::mt19937_64 rng;
};

struct RunResult {
  CoalitionStructure final;
  std::int64_t steps_executed = 0;
  std::int64_t accepted_moves = 0;
  // Stopped before max_steps, by the stability window or at a fixed point.
  bool converged_early = false;
  bool fixed_point = false;
  std::vector<Payoff> final_payoffs;
};

// Called after every accepted move with the step number, the routine and the
// structure after the move.
using TraceFn = std::function<void(std::int64_t, Routine, const Formation&)>;

// "<step> <routine> <structure>"
std::string format_trace_line(std::int64_t step, Routine routine, const Formation& f);

class Simulation {
 public:
  Simulation(const GameInstance& game, const SimConfig& config);

  const SimState& state() const { return state_; }
  const CoalitionValues& values() const { return values_; }
  void set_trace(TraceFn trace) { trace_ = std::move(trace); }
  // Replaces the current structure; step counters are kept.
  void reset(const CoalitionStructure& cs);

  // One attempt of a routine with fresh random selections.
  bool try_join();
  bool try_exit();
  bool try_pair();
  bool try_defect();
  bool try_split();
  bool try_individual();

  // The six routines once each, in the order above.
  bool step();
  // Every agent in random order attempts a merge and then a breakaway.
  bool baseline_step();

  // Steps from the current state until max_steps or the stability window.
  RunResult run();

 private:
  int uniform(int count);
  Mask random_proper_subset(Mask block);
  bool apply(Routine routine, std::optional<Mask> formed);

  GameInstance game_;
  SimConfig config_;
  CoalitionValues values_;
  SimState state_;
  std::int64_t accepted_ = 0;
  TraceFn trace_;
  std::vector<int> scratch_;
};

// Runs the configured algorithm from all singletons.
RunResult run(const GameInstance& game, const SimConfig& config, TraceFn trace = {});
// Runs the baseline regardless of config.algorithm.
RunResult run_baseline(const GameInstance& game, const SimConfig& config, TraceFn trace = {});

}  // namespace glovecore

#endif  // GLOVECORE_HEURISTIC_HPP
