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

// Brute-force core computation: every coalition is tested against every
// coalition structure.

#ifndef GLOVECORE_CORE_SOLVER_HPP
#define GLOVECORE_CORE_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glovecore/game.hpp"

namespace glovecore {

struct CoreOptions {
  PayoffRule rule = PayoffRule::kExact;
  // Threads sharing the coalition loop. The result does not depend on it.
  int workers = 1;
};

struct CoreSet {
  std::string game_id;
  int num_players = 0;
  PayoffRule rule = PayoffRule::kExact;
  // Unblocked structures in enumeration order.
  std::vector<CoalitionStructure> members;
  std::uint64_t partitions_examined = 0;
  std::uint64_t coalitions_examined = 0;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  bool contains(const CoalitionStructure& cs) const;
};

// True iff every member of c strictly prefers c to its own block in cs.
bool blocks(const GameInstance& game, Coalition c, const CoalitionStructure& cs,
            PayoffRule rule = PayoffRule::kExact);

bool is_core_member(const GameInstance& game, const CoalitionStructure& cs,
                    PayoffRule rule = PayoffRule::kExact);

// The blocking coalition with the smallest mask, if any.
std::optional<Coalition> blocking_witness(const GameInstance& game, const CoalitionStructure& cs,
                                          PayoffRule rule = PayoffRule::kExact);

// Same tests against a precomputed value table.
bool blocks(const CoalitionValues& values, Coalition c, const CoalitionStructure& cs);
std::optional<Coalition> blocking_witness(const CoalitionValues& values,
                                          const CoalitionStructure& cs);

CoreSet core_set(const GameInstance& game, const CoreOptions& options = {});

}  // namespace glovecore

#endif  // GLOVECORE_CORE_SOLVER_HPP
