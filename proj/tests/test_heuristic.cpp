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

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "glovecore/builtin_games.hpp"
#include "glovecore/core_solver.hpp"
#include "glovecore/heuristic.hpp"

using namespace glovecore;

namespace {

const GameInstance& eight_player() {
  static const GameInstance g = *builtin_game("g8.1");
  return g;
}

Formation formation(const char* blocks, int n) {
  return Formation(CoalitionStructure::parse(blocks, n));
}

int block_index(const Formation& f, int player) { return f.index_of(player); }

bool valid_partition(const Formation& f) {
  Mask covered = 0;
  for (int k = 0; k < f.num_blocks(); ++k) {
    if (f.block(k) == 0 || (covered & f.block(k)) != 0) return false;
    covered |= f.block(k);
  }
  for (int i = 0; i < f.num_players(); ++i) {
    if ((f.block_of(i) >> i & 1u) == 0) return false;
  }
  return covered == full_mask(f.num_players());
}

}  // namespace

TEST_CASE("formation bookkeeping") {
  Formation f(4);
  CHECK(f.structure() == CoalitionStructure::singletons(4));
  f.form(0b0110);
  CHECK(f.structure().to_string() == "(0)(1,2)(3)");
  f.form(0b1100);
  CHECK(f.structure().to_string() == "(0)(1)(2,3)");
  CHECK(valid_partition(f));
}

TEST_CASE("join") {
  const GameInstance comp("c", {1, 0}, {0, 1});
  CHECK(moves::join(CoalitionValues(comp), Formation(2), 0, 1) == Mask{0b11});
  const GameInstance lefts("l", {1, 2}, {0, 0});
  CHECK_FALSE(moves::join(CoalitionValues(lefts), Formation(2), 0, 1));
  const auto f = formation("(0)(1,4)(2,6)(3)(5)(7)", 8);
  CHECK_FALSE(moves::join(CoalitionValues(eight_player()), f, 1, 2));
  // Same coalition: nothing to merge.
  CHECK_FALSE(moves::join(CoalitionValues(eight_player()), f, 1, 4));

  Simulation sim(comp, SimConfig{});
  CHECK(sim.try_join());
  CHECK(sim.state().current.structure() == CoalitionStructure::grand(2));
}

TEST_CASE("exit") {
  const GameInstance g("e", {1, 0}, {1, 0});
  const CoalitionValues v(g);
  CHECK(moves::exit(v, Formation(CoalitionStructure::grand(2)), 1) == Mask{0b10});
  const auto core = formation("(0,5)(1)(2,3,4)(6)(7)", 8);
  for (int agent : {2, 3, 4}) CHECK_FALSE(moves::exit(CoalitionValues(eight_player()), core, agent));

  Simulation sim(g, SimConfig{});
  CHECK_FALSE(sim.try_exit());
}

TEST_CASE("pair") {
  const GameInstance g("p", {2, 0}, {0, 2});
  const CoalitionValues v(g);
  CHECK(moves::pair(v, Formation(2), 0, 1) == Mask{0b11});
  CHECK_FALSE(moves::pair(v, Formation(CoalitionStructure::grand(2)), 0, 1));
  CHECK_FALSE(moves::pair(v, Formation(2), 1, 1));
  const auto core = formation("(0,5)(1)(2,3,4)(6)(7)", 8);
  CHECK_FALSE(moves::pair(CoalitionValues(eight_player()), core, 2, 7));
}

TEST_CASE("defect") {
  const GameInstance g("d", {0, 1}, {1, 0});
  CHECK(moves::defect(CoalitionValues(g), Formation(2), 0, 1) == Mask{0b11});

  // Player 2 holds nothing; joining {0,1} lowers the members' shares.
  const GameInstance broke("b", {1, 0, 0}, {0, 1, 0});
  const auto f = formation("(0,1)(2)", 3);
  CHECK_FALSE(moves::defect(CoalitionValues(broke), f, 2, block_index(f, 0)));

  const auto core = formation("(0,5)(1)(2,3,4)(6)(7)", 8);
  CHECK_FALSE(moves::defect(CoalitionValues(eight_player()), core, 0, block_index(core, 2)));
  CHECK_FALSE(moves::defect(CoalitionValues(eight_player()), core, 2, block_index(core, 2)));
}

TEST_CASE("split") {
  const GameInstance g("s", {1, 0, 0}, {0, 1, 0});
  const auto f = Formation(CoalitionStructure::grand(3));
  CHECK(moves::split(CoalitionValues(g), f, 0, 0b011, SplitRule::kEither) == Mask{0b011});
  // The dead weight alone does not improve, so the conjunctive rule refuses.
  CHECK_FALSE(moves::split(CoalitionValues(g), f, 0, 0b011, SplitRule::kBoth));

  const auto core = formation("(0,5)(1)(2,3,4)(6)(7)", 8);
  const CoalitionValues v(eight_player());
  const int k = block_index(core, 2);
  for (Mask s : {0b00100u, 0b01000u, 0b10000u, 0b01100u, 0b10100u, 0b11000u}) {
    CHECK_FALSE(moves::split(v, core, k, s, SplitRule::kEither));
  }
  // Not proper subsets.
  CHECK_FALSE(moves::split(v, core, k, 0b11100u, SplitRule::kEither));
  CHECK_FALSE(moves::split(v, core, block_index(core, 1), 0b10u, SplitRule::kEither));
}

TEST_CASE("individual") {
  const auto& small = *builtin_game("g3.1");
  const CoalitionValues v(small);
  const Formation grand(CoalitionStructure::grand(3));
  CHECK(moves::individual(v, grand, 0) == Mask{0b001});
  CHECK_FALSE(moves::individual(v, Formation(3), 0));
  // Paid exactly the singleton value: no strict gain.
  const GameInstance tie("t", {1, 1}, {1, 1});
  CHECK_FALSE(moves::individual(CoalitionValues(tie), Formation(CoalitionStructure::grand(2)), 0));
}

TEST_CASE("step leaves a structure without improving moves unchanged") {
  const GameInstance lefts("l", {1, 2, 3}, {0, 0, 0});
  Simulation sim(lefts, SimConfig{});
  for (int i = 0; i < 50; ++i) CHECK_FALSE(sim.step());
  CHECK(sim.state().current.structure() == CoalitionStructure::singletons(3));
  CHECK(sim.state().step == 50);
  CHECK(sim.state().last_change_step == 0);
}

TEST_CASE("the eight-player local maximum admits no move") {
  const auto f = formation("(0)(1,4)(2,6)(3)(5)(7)", 8);
  CHECK(available_moves(CoalitionValues(eight_player()), f).empty());
  CHECK(is_fixed_point(CoalitionValues(eight_player()), f, Algorithm::kSixRoutine));
  Simulation sim(eight_player(), SimConfig{});
  sim.reset(f.structure());
  for (int i = 0; i < 2000; ++i) CHECK_FALSE(sim.step());
}

TEST_CASE("runs") {
  SUBCASE("single player") {
    const RunResult r = run(GameInstance("solo", {3}, {2}), SimConfig{});
    CHECK(r.final.to_string() == "(0)");
    CHECK(r.accepted_moves == 0);
  }
  SUBCASE("three-player game always ends in its unique core member") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      SimConfig c;
      c.seed = seed;
      CHECK(run(*builtin_game("g3.1"), c).final == CoalitionStructure::singletons(3));
    }
  }
  SUBCASE("eight-player example sometimes stalls outside the core") {
    int stalled = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      SimConfig c;
      c.seed = seed;
      const RunResult r = run(eight_player(), c);
      const auto w = blocking_witness(eight_player(), r.final);
      if (w) {
        ++stalled;
        CHECK(r.fixed_point);
      }
    }
    CHECK(stalled > 0);
  }
  SUBCASE("stability window") {
    SimConfig c;
    c.max_steps = 500;
    c.stability_window = 20;
    c.stop_at_fixed_point = false;
    const RunResult r = run(GameInstance("l", {1, 1}, {0, 0}), c);
    CHECK(r.converged_early);
    CHECK(r.steps_executed == 20);
  }
  SUBCASE("budget exhaustion without early stop") {
    SimConfig c;
    c.max_steps = 300;
    c.stability_window = 0;
    c.stop_at_fixed_point = false;
    const RunResult r = run(GameInstance("l", {1, 1}, {0, 0}), c);
    CHECK_FALSE(r.converged_early);
    CHECK(r.steps_executed == 300);
    CHECK(r.fixed_point);
  }
}

TEST_CASE("baseline") {
  CHECK(run_baseline(GameInstance("solo", {1}, {1}), SimConfig{}).final.to_string() == "(0)");
  const RunResult r = run_baseline(GameInstance("c", {1, 0}, {0, 1}), SimConfig{});
  CHECK(r.final == CoalitionStructure::grand(2));
  CHECK(r.accepted_moves == 1);
}

TEST_CASE("config validation") {
  SimConfig c;
  c.max_steps = 0;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  c.max_steps = 10;
  c.stability_window = 11;
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
  CHECK_THROWS_AS(parse_algorithm("annealing"), std::invalid_argument);
  CHECK(parse_algorithm("cf") == Algorithm::kBaseline);
}

TEST_CASE("trace lines") {
  std::vector<std::string> lines;
  SimConfig c;
  c.seed = 4;
  run(eight_player(), c, [&](std::int64_t step, Routine r, const Formation& f) {
    lines.push_back(format_trace_line(step, r, f));
  });
  REQUIRE_FALSE(lines.empty());
  const RunResult r = run(eight_player(), c);
  CHECK(static_cast<std::int64_t>(lines.size()) == r.accepted_moves);
  // Last trace line ends with the final structure.
  CHECK(lines.back().ends_with(" " + r.final.to_string()));
  CHECK(std::stoll(lines.front()) >= 1);
}

// Invariants.

TEST_CASE("property: every move keeps a partition and pleases those consulted") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto g = random_game(n, rng());
    const CoalitionValues v(g);
    std::vector<int> labels(n);
    for (int& l : labels) l = static_cast<int>(rng() % n);
    const Formation f(CoalitionStructure::from_labels(labels));
    for (SplitRule rule : {SplitRule::kEither, SplitRule::kBoth}) {
      for (const Move& m : available_moves(v, f, rule)) {
        Formation after = f;
        after.form(m.formed);
        REQUIRE(valid_partition(after));
        auto improved = [&](Mask who) {
          for (int i = 0; i < n; ++i) {
            if ((who >> i & 1u) && !v.better(after.block_of(i), f.block_of(i))) return false;
          }
          return true;
        };
        switch (m.routine) {
          case Routine::kExit: {
            const int agent = std::countr_zero(m.formed);
            CHECK(improved(f.block_of(agent) & ~m.formed));
            break;
          }
          case Routine::kSplit: {
            const Mask whole = f.block_of(m.formed != 0 ? std::countr_zero(m.formed) : 0);
            const bool leavers = improved(m.formed);
            const bool stayers = improved(whole & ~m.formed);
            CHECK((rule == SplitRule::kEither ? (leavers || stayers) : (leavers && stayers)));
            break;
          }
          default:
            CHECK(improved(m.formed));
        }
      }
    }
  }
}

TEST_CASE("property: fixed points are individually rational") {
  std::mt19937_64 rng(22);
  int fixed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const auto g = random_game(n, rng());
    const CoalitionValues v(g);
    std::vector<int> labels(n);
    for (int& l : labels) l = static_cast<int>(rng() % n);
    const Formation f(CoalitionStructure::from_labels(labels));
    if (!available_moves(v, f).empty()) continue;
    ++fixed;
    for (int i = 0; i < n; ++i) CHECK_FALSE(v.better(Mask{1} << i, f.block_of(i)));
  }
  CHECK(fixed > 0);
}

TEST_CASE("property: core members are fixed points") {
  for (const auto& g : builtin_games()) {
    if (g.num_players() > 5) continue;
    const CoalitionValues v(g);
    for (const auto& cs : core_set(g).members) {
      CAPTURE(g.id());
      CAPTURE(cs.to_string());
      CHECK(available_moves(v, Formation(cs)).empty());
      CHECK(available_moves(v, Formation(cs), SplitRule::kBoth).empty());
      CHECK(available_baseline_moves(v, Formation(cs)).empty());
    }
  }
}

TEST_CASE("property: runs are reproducible") {
  for (const char* id : {"g5.1", "g8.1", "g9.5"}) {
    for (Algorithm alg : {Algorithm::kSixRoutine, Algorithm::kBaseline}) {
      SimConfig c;
      c.seed = 99;
      c.algorithm = alg;
      const auto a = run(*builtin_game(id), c);
      const auto b = run(*builtin_game(id), c);
      CHECK(a.final == b.final);
      CHECK(a.steps_executed == b.steps_executed);
      CHECK(a.accepted_moves == b.accepted_moves);
    }
  }
}

TEST_CASE("property: stopping at a fixed point does not change the outcome") {
  for (const char* id : {"g4.5", "g6.9", "g8.1", "g8.10", "g9.1"}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      for (Algorithm alg : {Algorithm::kSixRoutine, Algorithm::kBaseline}) {
        SimConfig fast;
        fast.seed = seed;
        fast.algorithm = alg;
        fast.max_steps = 3000;
        fast.stability_window = 0;
        SimConfig slow = fast;
        slow.stop_at_fixed_point = false;
        const auto a = run(*builtin_game(id), fast);
        const auto b = run(*builtin_game(id), slow);
        CAPTURE(id);
        CAPTURE(seed);
        CHECK(a.final == b.final);
        CHECK(a.accepted_moves == b.accepted_moves);
        CHECK(a.steps_executed <= b.steps_executed);
      }
    }
  }
}
