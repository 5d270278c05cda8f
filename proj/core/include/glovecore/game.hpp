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

// Glove-game model: instances, coalitions, coalition structures and exact
// equal-division payoffs.

#ifndef GLOVECORE_GAME_HPP
#define GLOVECORE_GAME_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glovecore {

// Coalitions are bitmasks, so the player count is bounded by the mask width
// we are willing to enumerate over.
inline constexpr int kMaxPlayers = 16;

using Mask = std::uint32_t;

inline constexpr Mask full_mask(int n) { return (Mask{1} << n) - 1; }

// A set of players; bit i is set iff player i is a member.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask mask) : mask_(mask) {}

  static Coalition of(std::initializer_list<int> players);
  static constexpr Coalition singleton(int player) {
    return Coalition(Mask{1} << player);
  }

  constexpr Mask mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int player) const {
    return player >= 0 && player < 32 && ((mask_ >> player) & 1u) != 0;
  }
  constexpr int lowest() const { return std::countr_zero(mask_); }
  constexpr Coalition with(int player) const {
    return Coalition(mask_ | (Mask{1} << player));
  }
  constexpr Coalition without(int player) const {
    return Coalition(mask_ & ~(Mask{1} << player));
  }

  std::vector<int> members() const;

  // Block notation, e.g. "(2,3,4)".
  std::string to_string() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

 private:
  Mask mask_ = 0;
};

// Exact non-negative rational. Comparison cross-multiplies, so 2/4 == 1/2.
class Payoff {
 public:
  constexpr Payoff() = default;
  Payoff(std::int64_t numerator, std::int64_t denominator);

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  // Reduced fraction: "5", "7/2".
  std::string to_string() const;

  friend constexpr std::strong_ordering operator<=>(Payoff a, Payoff b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }
  friend constexpr bool operator==(Payoff a, Payoff b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// How a coalition's glove pairs are divided among its members. kExact is the
// equal split value/|C|. kTruncated rounds each share down to an integer,
// which is what an integer-division implementation of the same formula
// computes.
enum class PayoffRule { kExact, kTruncated };

std::string_view to_string(PayoffRule rule);
PayoffRule parse_payoff_rule(std::string_view text);

// Per-player glove endowments.
class GameInstance {
 public:
  GameInstance(std::string id, std::vector<int> left, std::vector<int> right);

  const std::string& id() const { return id_; }
  int num_players() const { return static_cast<int>(left_.size()); }
  std::span<const int> left() const { return left_; }
  std::span<const int> right() const { return right_; }
  int left(int player) const { return left_.at(player); }
  int right(int player) const { return right_.at(player); }
  Mask all_players() const { return full_mask(num_players()); }

  friend bool operator==(const GameInstance&, const GameInstance&) = default;

 private:
  std::string id_;
  std::vector<int> left_;
  std::vector<int> right_;
};

// A partition of all players, stored as a restricted growth string: player 0
// has label 0 and every later label is at most one more than the largest
// label before it. Two structures are equal iff their label strings are.
class CoalitionStructure {
 public:
  CoalitionStructure() = default;

  // Any labeling that assigns each player a block id; relabeled canonically.
  static CoalitionStructure from_labels(std::span<const int> labels);
  // Throws std::invalid_argument unless the blocks partition {0..n-1}.
  static CoalitionStructure from_blocks(int n, std::span<const Coalition> blocks);
  // Parses block notation such as "(0,5)(1)(2,3,4)(6)(7)". Whitespace is
  // ignored. The blocks must partition {0..n-1}.
  static CoalitionStructure parse(std::string_view text, int n);
  static CoalitionStructure singletons(int n);
  static CoalitionStructure grand(int n);

  int num_players() const { return static_cast<int>(labels_.size()); }
  int num_blocks() const { return num_blocks_; }
  std::span<const std::uint8_t> labels() const { return labels_; }
  int label_of(int player) const { return labels_.at(player); }

  Coalition block(int label) const;
  Coalition block_of(int player) const { return block(label_of(player)); }
  // Ordered by label, i.e. by each block's smallest member.
  std::vector<Coalition> blocks() const;

  std::string to_string() const;

  friend bool operator==(const CoalitionStructure& a, const CoalitionStructure& b) {
    return a.labels_ == b.labels_;
  }
  friend auto operator<=>(const CoalitionStructure& a, const CoalitionStructure& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  explicit CoalitionStructure(std::vector<std::uint8_t> labels);

  std::vector<std::uint8_t> labels_;
  int num_blocks_ = 0;
};

enum class Preference { kPrefersFirst, kIndifferent, kPrefersSecond };

// min(total left gloves, total right gloves) over the members of c.
int coalition_value(const GameInstance& game, Coalition c);

// Share of player i in coalition c.
Payoff payoff(const GameInstance& game, Coalition c, int player,
              PayoffRule rule = PayoffRule::kExact);

Preference prefers(const GameInstance& game, int player, Coalition a, Coalition b,
                   PayoffRule rule = PayoffRule::kExact);

std::vector<Payoff> structure_payoffs(const GameInstance& game, const CoalitionStructure& cs,
                                     PayoffRule rule = PayoffRule::kExact);

// Endowments drawn uniformly from {0..max_gloves}.
GameInstance random_game(int n, std::uint64_t seed, int max_gloves = 9, std::string id = {});

// Per-member payoff of every coalition of a game, precomputed once. Indexed
// by mask; entry 0 is unused.
class CoalitionValues {
 public:
  explicit CoalitionValues(const GameInstance& game, PayoffRule rule = PayoffRule::kExact);

  int num_players() const { return n_; }
  PayoffRule rule() const { return rule_; }
  int value(Mask m) const { return value_[m]; }
  Payoff share(Mask m) const { return Payoff(share_num_[m], share_den_[m]); }
  std::int32_t share_numerator(Mask m) const { return share_num_[m]; }
  std::int32_t share_denominator(Mask m) const { return share_den_[m]; }

  // share(a) > share(b), without constructing Payoff objects.
  bool better(Mask a, Mask b) const {
    return std::int64_t{share_num_[a]} * share_den_[b] >
           std::int64_t{share_num_[b]} * share_den_[a];
  }

 private:
  int n_;
  PayoffRule rule_;
  std::vector<std::int32_t> value_;
  std::vector<std::int32_t> share_num_;
  std::vector<std::int32_t> share_den_;
};

}  // namespace glovecore

template <>
struct std::hash<glovecore::CoalitionStructure> {
  std::size_t operator()(const glovecore::CoalitionStructure& cs) const noexcept;
};

#endif  // GLOVECORE_GAME_HPP
