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

#include "glovecore/heuristic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace glovecore {

std::string_view to_string(Algorithm a) {
  return a == Algorithm::kSixRoutine ? "six" : "cf";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "six") return Algorithm::kSixRoutine;
  if (text == "cf") return Algorithm::kBaseline;
  throw std::invalid_argument("unknown algorithm: " + std::string(text) + " (expected six or cf)");
}

std::string_view to_string(Routine r) {
  switch (r) {
    case Routine::kJoin: return "join";
    case Routine::kExit: return "exit";
    case Routine::kPair: return "pair";
    case Routine::kDefect: return "defect";
    case Routine::kSplit: return "split";
    case Routine::kIndividual: return "individual";
    case Routine::kMerge: return "merge";
    case Routine::kBreakaway: return "breakaway";
  }
  return "?";
}

void SimConfig::validate() const {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
  if (stability_window < 0 || stability_window > max_steps) {
    throw std::invalid_argument("stability_window must be in [0, max_steps]");
  }
}

Formation::Formation(int n) {
  if (n < 1 || n > kMaxPlayers) throw std::invalid_argument("formation: player count out of range");
  blocks_.resize(n);
  owner_.resize(n);
  for (int i = 0; i < n; ++i) {
    blocks_[i] = Mask{1} << i;
    owner_[i] = i;
  }
}

Formation::Formation(const CoalitionStructure& cs) : owner_(cs.num_players()) {
  for (Coalition c : cs.blocks()) blocks_.push_back(c.mask());
  for (int i = 0; i < cs.num_players(); ++i) owner_[i] = cs.label_of(i);
}

void Formation::form(Mask c) {
  for (auto& b : blocks_) b &= ~c;
  blocks_.erase(std::remove(blocks_.begin(), blocks_.end(), Mask{0}), blocks_.end());
  blocks_.push_back(c);
  for (int k = 0; k < num_blocks(); ++k) {
    for (Mask m = blocks_[k]; m != 0; m &= m - 1) owner_[std::countr_zero(m)] = k;
  }
}

CoalitionStructure Formation::structure() const {
  std::vector<int> labels(owner_.begin(), owner_.end());
  return CoalitionStructure::from_labels(labels);
}

bool all_improve(const CoalitionValues& values, const Formation& f, Mask c) {
  for (Mask m = c; m != 0; m &= m - 1) {
    if (!values.better(c, f.block_of(std::countr_zero(m)))) return false;
  }
  return true;
}

namespace moves {

namespace {
constexpr Mask bit(int i) { return Mask{1} << i; }
}  // namespace

std::optional<Mask> join(const CoalitionValues& v, const Formation& f, int a, int b) {
  if (f.index_of(a) == f.index_of(b)) return std::nullopt;
  const Mask merged = f.block_of(a) | f.block_of(b);
  if (!all_improve(v, f, merged)) return std::nullopt;
  return merged;
}

std::optional<Mask> exit(const CoalitionValues& v, const Formation& f, int agent) {
  const Mask block = f.block_of(agent);
  if (std::popcount(block) < 2) return std::nullopt;
  const Mask rest = block & ~bit(agent);
  // Only the members who stay are asked.
  if (!v.better(rest, block)) return std::nullopt;
  return bit(agent);
}

std::optional<Mask> pair(const CoalitionValues& v, const Formation& f, int a, int b) {
  if (a == b) return std::nullopt;
  const Mask p = bit(a) | bit(b);
  if (!all_improve(v, f, p)) return std::nullopt;
  return p;
}

std::optional<Mask> defect(const CoalitionValues& v, const Formation& f, int agent,
                           int target_block) {
  if (f.index_of(agent) == target_block) return std::nullopt;
  const Mask joined = f.block(target_block) | bit(agent);
  if (!all_improve(v, f, joined)) return std::nullopt;
  return joined;
}

std::optional<Mask> split(const CoalitionValues& v, const Formation& f, int block,
                          Mask breakaway, SplitRule rule) {
  const Mask whole = f.block(block);
  if ((breakaway & ~whole) != 0 || breakaway == 0 || breakaway == whole) return std::nullopt;
  const Mask rest = whole & ~breakaway;
  const bool leavers = v.better(breakaway, whole);
  const bool stayers = v.better(rest, whole);
  const bool ok = rule == SplitRule::kEither ? (leavers || stayers) : (leavers && stayers);
  if (!ok) return std::nullopt;
  return breakaway;
}

std::optional<Mask> individual(const CoalitionValues& v, const Formation& f, int agent) {
  const Mask block = f.block_of(agent);
  if (std::popcount(block) < 2) return std::nullopt;
  if (!v.better(bit(agent), block)) return std::nullopt;
  return bit(agent);
}

std::optional<Mask> merge(const CoalitionValues& v, const Formation& f, int agent,
                          int other_block) {
  if (f.index_of(agent) == other_block) return std::nullopt;
  const Mask merged = f.block_of(agent) | f.block(other_block);
  if (!all_improve(v, f, merged)) return std::nullopt;
  return merged;
}

std::optional<Mask> breakaway(const CoalitionValues& v, const Formation& f, int agent,
                              Mask subset) {
  const Mask block = f.block_of(agent);
  if ((subset & bit(agent)) == 0 || (subset & ~block) != 0 || subset == block) {
    return std::nullopt;
  }
  if (!v.better(subset, block)) return std::nullopt;
  return subset;
}

}  // namespace moves

namespace {

// Calls visit(move) for every accepted selection; stops when visit returns
// false. Returns false iff it was stopped.
template <typename Visit>
bool for_each_move(const CoalitionValues& values, const Formation& f, SplitRule rule,
                   Visit&& visit) {
  auto offer = [&](Routine r, std::optional<Mask> m) { return !m || visit(Move{r, *m}); };
  const int n = f.num_players();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (!offer(Routine::kJoin, moves::join(values, f, a, b))) return false;
      if (!offer(Routine::kPair, moves::pair(values, f, a, b))) return false;
    }
    if (!offer(Routine::kExit, moves::exit(values, f, a))) return false;
    for (int k = 0; k < f.num_blocks(); ++k) {
      if (!offer(Routine::kDefect, moves::defect(values, f, a, k))) return false;
    }
    if (!offer(Routine::kIndividual, moves::individual(values, f, a))) return false;
  }
  for (int k = 0; k < f.num_blocks(); ++k) {
    const Mask whole = f.block(k);
    // Proper non-empty sub-masks of the block.
    for (Mask s = (whole - 1) & whole; s != 0; s = (s - 1) & whole) {
      if (!offer(Routine::kSplit, moves::split(values, f, k, s, rule))) return false;
    }
  }
  return true;
}

template <typename Visit>
bool for_each_baseline_move(const CoalitionValues& values, const Formation& f, Visit&& visit) {
  auto offer = [&](Routine r, std::optional<Mask> m) { return !m || visit(Move{r, *m}); };
  for (int a = 0; a < f.num_players(); ++a) {
    for (int k = 0; k < f.num_blocks(); ++k) {
      if (!offer(Routine::kMerge, moves::merge(values, f, a, k))) return false;
    }
    const Mask block = f.block_of(a);
    const Mask self = Mask{1} << a;
    for (Mask s = (block - 1) & block; s != 0; s = (s - 1) & block) {
      if ((s & self) == 0) continue;
      if (!offer(Routine::kBreakaway, moves::breakaway(values, f, a, s))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Move> available_moves(const CoalitionValues& values, const Formation& f,
                                  SplitRule rule) {
  std::vector<Move> out;
  for_each_move(values, f, rule, [&](const Move& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::vector<Move> available_baseline_moves(const CoalitionValues& values, const Formation& f) {
  std::vector<Move> out;
  for_each_baseline_move(values, f, [&](const Move& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

bool is_fixed_point(const CoalitionValues& values, const Formation& f, Algorithm algorithm,
                    SplitRule rule) {
  auto stop = [](const Move&) { return false; };
  if (algorithm == Algorithm::kBaseline) return for_each_baseline_move(values, f, stop);
  return for_each_move(values, f, rule, stop);
}

std::string format_trace_line(std::int64_t step, Routine routine, const Formation& f) {
  return std::to_string(step) + " " + std::string(to_string(routine)) + " " +
         f.structure().to_string();
}

Simulation::Simulation(const GameInstance& game, const SimConfig& config)
    : game_(game),
      config_(config),
      values_(game, config.rule),
      state_{Formation(game.num_players()), 0, 0, std::mt19937_64(config.seed)} {
  config_.validate();
  scratch_.resize(game.num_players());
}

void Simulation::reset(const CoalitionStructure& cs) {
  if (cs.num_players() != game_.num_players()) {
    throw std::invalid_argument("reset: structure does not match the game's player count");
  }
  state_.current = Formation(cs);
}

int Simulation::uniform(int count) {
  return std::uniform_int_distribution<int>(0, count - 1)(state_.rng);
}

Mask Simulation::random_proper_subset(Mask block) {
  // Fair coin per member, redrawn until neither empty nor the whole block.
  for (;;) {
    Mask s = 0;
    for (Mask m = block; m != 0; m &= m - 1) {
      if (state_.rng() & 1u) s |= m & (~m + 1);
    }
    if (s != 0 && s != block) return s;
  }
}

bool Simulation::apply(Routine routine, std::optional<Mask> formed) {
  if (!formed) return false;
  state_.current.form(*formed);
  ++accepted_;
  if (trace_) trace_(state_.step, routine, state_.current);
  return true;
}

bool Simulation::try_join() {
  const int n = game_.num_players();
  if (n < 2) return false;
  const int a = uniform(n);
  int b = uniform(n - 1);
  if (b >= a) ++b;
  return apply(Routine::kJoin, moves::join(values_, state_.current, a, b));
}

bool Simulation::try_exit() {
  const Formation& f = state_.current;
  int count = 0;
  for (int i = 0; i < f.num_players(); ++i) {
    if (std::popcount(f.block_of(i)) > 1) scratch_[count++] = i;
  }
  if (count == 0) return false;
  return apply(Routine::kExit, moves::exit(values_, f, scratch_[uniform(count)]));
}

bool Simulation::try_pair() {
  const int n = game_.num_players();
  if (n < 2) return false;
  const int a = uniform(n);
  int b = uniform(n - 1);
  if (b >= a) ++b;
  return apply(Routine::kPair, moves::pair(values_, state_.current, a, b));
}

bool Simulation::try_defect() {
  const Formation& f = state_.current;
  if (f.num_blocks() < 2) return false;
  const int agent = uniform(f.num_players());
  int target = uniform(f.num_blocks() - 1);
  if (target >= f.index_of(agent)) ++target;
  return apply(Routine::kDefect, moves::defect(values_, f, agent, target));
}

bool Simulation::try_split() {
  const Formation& f = state_.current;
  const int k = uniform(f.num_blocks());
  const Mask whole = f.block(k);
  if (std::popcount(whole) < 2) return false;
  const Mask part = random_proper_subset(whole);
  return apply(Routine::kSplit, moves::split(values_, f, k, part, config_.split_rule));
}

bool Simulation::try_individual() {
  const Formation& f = state_.current;
  return apply(Routine::kIndividual, moves::individual(values_, f, uniform(f.num_players())));
}

bool Simulation::step() {
  ++state_.step;
  bool changed = false;
  changed |= try_join();
  changed |= try_exit();
  changed |= try_pair();
  changed |= try_defect();
  changed |= try_split();
  changed |= try_individual();
  if (changed) state_.last_change_step = state_.step;
  return changed;
}

bool Simulation::baseline_step() {
  ++state_.step;
  bool changed = false;
  std::iota(scratch_.begin(), scratch_.end(), 0);
  std::shuffle(scratch_.begin(), scratch_.end(), state_.rng);
  for (int agent : scratch_) {
    const Formation& f = state_.current;
    if (f.num_blocks() > 1) {
      int other = uniform(f.num_blocks() - 1);
      if (other >= f.index_of(agent)) ++other;
      changed |= apply(Routine::kMerge, moves::merge(values_, f, agent, other));
    }
    const Mask block = f.block_of(agent);
    if (std::popcount(block) > 1) {
      // Random proper subset of the block that keeps the agent.
      const Mask self = Mask{1} << agent;
      const Mask others = block & ~self;
      Mask pick = 0;
      for (;;) {
        pick = 0;
        for (Mask m = others; m != 0; m &= m - 1) {
          if (state_.rng() & 1u) pick |= m & (~m + 1);
        }
        if (pick != others) break;
      }
      changed |= apply(Routine::kBreakaway, moves::breakaway(values_, f, agent, pick | self));
    }
  }
  if (changed) state_.last_change_step = state_.step;
  return changed;
}

RunResult Simulation::run() {
  RunResult result;
  const bool baseline = config_.algorithm == Algorithm::kBaseline;
  const std::int64_t start = state_.step;
  const std::int64_t accepted_before = accepted_;
  while (state_.step - start < config_.max_steps) {
    if (baseline) {
      baseline_step();
    } else {
      step();
    }
    const std::int64_t idle = state_.step - std::max(state_.last_change_step, start);
    if (config_.stability_window > 0 && idle >= config_.stability_window) {
      result.converged_early = true;
      break;
    }
    // Probe at idle lengths 16, 32, 64, ... so the check stays rare.
    if (config_.stop_at_fixed_point && idle >= 16 && (idle & (idle - 1)) == 0 &&
        is_fixed_point(values_, state_.current, config_.algorithm, config_.split_rule)) {
      result.converged_early = state_.step - start < config_.max_steps;
      break;
    }
  }
  result.fixed_point =
      is_fixed_point(values_, state_.current, config_.algorithm, config_.split_rule);
  result.final = state_.current.structure();
  result.steps_executed = state_.step - start;
  result.accepted_moves = accepted_ - accepted_before;
  result.final_payoffs = structure_payoffs(game_, result.final, config_.rule);
  return result;
}

RunResult run(const GameInstance& game, const SimConfig& config, TraceFn trace) {
  Simulation sim(game, config);
  sim.set_trace(std::move(trace));
  return sim.run();
}

RunResult run_baseline(const GameInstance& game, const SimConfig& config, TraceFn trace) {
  SimConfig c = config;
  c.algorithm = Algorithm::kBaseline;
  return run(game, c, std::move(trace));
}

}  // namespace glovecore
