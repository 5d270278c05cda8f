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

#include "glovecore/core_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "glovecore/partition.hpp"

namespace glovecore {

namespace {

void check_structure(int n, const CoalitionStructure& cs) {
  if (cs.num_players() != n) {
    throw std::invalid_argument("structure " + cs.to_string() + " does not cover " +
                                std::to_string(n) + " players");
  }
}

// Block mask of each player, for fast payoff lookups.
std::vector<Mask> owners(const CoalitionStructure& cs) {
  const auto blocks = cs.blocks();
  std::vector<Mask> out(cs.num_players());
  for (int i = 0; i < cs.num_players(); ++i) out[i] = blocks[cs.label_of(i)].mask();
  return out;
}

bool blocks_owners(const CoalitionValues& values, Mask c, const Mask* owner) {
  for (Mask m = c; m != 0; m &= m - 1) {
    if (!values.better(c, owner[std::countr_zero(m)])) return false;
  }
  return true;
}

// Partitions are processed in chunks so memory stays bounded for large n.
constexpr std::size_t kChunk = std::size_t{1} << 15;

}  // namespace

bool CoreSet::contains(const CoalitionStructure& cs) const {
  return std::ranges::find(members, cs) != members.end();
}

bool blocks(const CoalitionValues& values, Coalition c, const CoalitionStructure& cs) {
  if (c.empty()) throw std::invalid_argument("blocks: coalition must be non-empty");
  check_structure(values.num_players(), cs);
  if ((c.mask() & ~full_mask(values.num_players())) != 0) {
    throw std::invalid_argument("blocks: coalition " + c.to_string() + " out of range");
  }
  const auto owner = owners(cs);
  return blocks_owners(values, c.mask(), owner.data());
}

bool blocks(const GameInstance& game, Coalition c, const CoalitionStructure& cs,
            PayoffRule rule) {
  if (c.empty()) throw std::invalid_argument("blocks: coalition must be non-empty");
  check_structure(game.num_players(), cs);
  for (int i : c.members()) {
    if (prefers(game, i, c, cs.block_of(i), rule) != Preference::kPrefersFirst) return false;
  }
  return true;
}

std::optional<Coalition> blocking_witness(const CoalitionValues& values,
                                          const CoalitionStructure& cs) {
  check_structure(values.num_players(), cs);
  const auto owner = owners(cs);
  const Mask end = Mask{1} << values.num_players();
  for (Mask c = 1; c < end; ++c) {
    if (blocks_owners(values, c, owner.data())) return Coalition(c);
  }
  return std::nullopt;
}

std::optional<Coalition> blocking_witness(const GameInstance& game, const CoalitionStructure& cs,
                                          PayoffRule rule) {
  check_structure(game.num_players(), cs);
  return blocking_witness(CoalitionValues(game, rule), cs);
}

bool is_core_member(const GameInstance& game, const CoalitionStructure& cs, PayoffRule rule) {
  return !blocking_witness(game, cs, rule).has_value();
}

CoreSet core_set(const GameInstance& game, const CoreOptions& options) {
  const int n = game.num_players();
  const CoalitionValues values(game, options.rule);
  const Mask coalition_end = Mask{1} << n;
  const int workers = std::max(1, options.workers);

  CoreSet result;
  result.game_id = game.id();
  result.num_players = n;
  result.rule = options.rule;
  result.coalitions_examined = coalition_end - 1;

  PartitionCursor cursor(n);
  std::vector<std::uint8_t> labels;  // chunk of label strings, n per entry
  std::vector<Mask> owner;           // chunk of block masks, n per entry
  std::vector<std::uint8_t> blocked;
  labels.reserve(kChunk * n);
  owner.reserve(kChunk * n);

  auto flush = [&] {
    const std::size_t count = blocked.size();
    // Outer loop over coalitions, inner over still-unblocked structures.
    auto scan = [&](Mask first, Mask stride, std::vector<std::uint8_t>& flags) {
      for (Mask c = first; c < coalition_end; c += stride) {
        for (std::size_t q = 0; q < count; ++q) {
          if (flags[q] == 0 && blocks_owners(values, c, &owner[q * n])) flags[q] = 1;
        }
      }
    };
    if (workers == 1) {
      scan(1, 1, blocked);
    } else {
      std::vector<std::vector<std::uint8_t>> shard(workers, blocked);
      {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] { scan(static_cast<Mask>(w + 1), workers, shard[w]); });
        }
      }
      for (const auto& flags : shard) {
        for (std::size_t q = 0; q < count; ++q) blocked[q] |= flags[q];
      }
    }
    for (std::size_t q = 0; q < count; ++q) {
      if (blocked[q] == 0) {
        std::vector<int> l(labels.begin() + q * n, labels.begin() + (q + 1) * n);
        result.members.push_back(CoalitionStructure::from_labels(l));
      }
    }
    labels.clear();
    owner.clear();
    blocked.clear();
  };

  while (!cursor.done()) {
    const auto l = cursor.labels();
    Mask block_mask[kMaxPlayers] = {};
    for (int i = 0; i < n; ++i) block_mask[l[i]] |= Mask{1} << i;
    for (int i = 0; i < n; ++i) {
      labels.push_back(l[i]);
      owner.push_back(block_mask[l[i]]);
    }
    blocked.push_back(0);
    ++result.partitions_examined;
    if (blocked.size() == kChunk) flush();
    cursor.advance();
  }
  if (!blocked.empty()) flush();
  return result;
}

}  // namespace glovecore
