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

#include "glovecore/game.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <stdexcept>

namespace glovecore {

Coalition Coalition::of(std::initializer_list<int> players) {
  Mask m = 0;
  for (int p : players) {
    if (p < 0 || p >= kMaxPlayers) {
      throw std::invalid_argument("player index out of range: " + std::to_string(p));
    }
    m |= Mask{1} << p;
  }
  return Coalition(m);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string Coalition::to_string() const {
  std::string s = "(";
  bool first = true;
  for (int p : members()) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  }
  s += ')';
  return s;
}

Payoff::Payoff(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
  if (denominator <= 0) throw std::invalid_argument("payoff denominator must be positive");
  if (numerator < 0) throw std::invalid_argument("payoff numerator must be non-negative");
}

std::string Payoff::to_string() const {
  const std::int64_t g = std::gcd(num_, den_);
  const std::int64_t n = num_ / g;
  const std::int64_t d = den_ / g;
  if (d == 1) return std::to_string(n);
  return std::to_string(n) + "/" + std::to_string(d);
}

std::string_view to_string(PayoffRule rule) {
  return rule == PayoffRule::kExact ? "exact" : "truncated";
}

PayoffRule parse_payoff_rule(std::string_view text) {
  if (text == "exact") return PayoffRule::kExact;
  if (text == "truncated") return PayoffRule::kTruncated;
  throw std::invalid_argument("unknown payoff rule: " + std::string(text));
}

GameInstance::GameInstance(std::string id, std::vector<int> left, std::vector<int> right)
    : id_(std::move(id)), left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != right_.size()) {
    throw std::invalid_argument("game " + id_ + ": left and right endowments differ in length");
  }
  if (left_.empty() || left_.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw std::invalid_argument("game " + id_ + ": player count must be in [1, " +
                                std::to_string(kMaxPlayers) + "]");
  }
  auto negative = [](int g) { return g < 0; };
  if (std::ranges::any_of(left_, negative) || std::ranges::any_of(right_, negative)) {
    throw std::invalid_argument("game " + id_ + ": glove counts must be non-negative");
  }
}

CoalitionStructure::CoalitionStructure(std::vector<std::uint8_t> labels)
    : labels_(std::move(labels)) {
  int max_label = -1;
  for (auto l : labels_) max_label = std::max(max_label, int{l});
  num_blocks_ = max_label + 1;
}

CoalitionStructure CoalitionStructure::from_labels(std::span<const int> labels) {
  if (labels.empty() || labels.size() > static_cast<std::size_t>(kMaxPlayers)) {
    throw std::invalid_argument("coalition structure must cover 1.." +
                                std::to_string(kMaxPlayers) + " players");
  }
  std::vector<std::uint8_t> canonical(labels.size());
  std::vector<std::pair<int, std::uint8_t>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::ranges::find(seen, labels[i], &std::pair<int, std::uint8_t>::first);
    if (it == seen.end()) {
      seen.emplace_back(labels[i], static_cast<std::uint8_t>(seen.size()));
      canonical[i] = seen.back().second;
    } else {
      canonical[i] = it->second;
    }
  }
  return CoalitionStructure(std::move(canonical));
}

CoalitionStructure CoalitionStructure::from_blocks(int n, std::span<const Coalition> blocks) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("player count out of range: " + std::to_string(n));
  }
  std::vector<int> labels(n, -1);
  Mask covered = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Mask m = blocks[b].mask();
    if (m == 0) throw std::invalid_argument("coalition structure contains an empty block");
    if ((m & ~full_mask(n)) != 0) {
      throw std::invalid_argument("block " + blocks[b].to_string() + " names a player >= " +
                                  std::to_string(n));
    }
    if ((m & covered) != 0) {
      throw std::invalid_argument("block " + blocks[b].to_string() + " overlaps an earlier block");
    }
    covered |= m;
    for (int p : blocks[b].members()) labels[p] = static_cast<int>(b);
  }
  if (covered != full_mask(n)) {
    throw std::invalid_argument("blocks do not cover all " + std::to_string(n) + " players");
  }
  return from_labels(labels);
}

CoalitionStructure CoalitionStructure::parse(std::string_view text, int n) {
  std::vector<Coalition> blocks;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> std::invalid_argument {
    return std::invalid_argument("malformed partition \"" + std::string(text) + "\": " + why);
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    Mask m = 0;
    bool expect_number = true;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw fail("unterminated block");
      if (expect_number) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected player index");
        int p = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          p = p * 10 + (text[i] - '0');
          if (p >= kMaxPlayers) throw fail("player index too large");
          ++i;
        }
        if ((m >> p) & 1u) throw fail("player " + std::to_string(p) + " repeated in a block");
        m |= Mask{1} << p;
        expect_number = false;
      } else if (text[i] == ',') {
        ++i;
        expect_number = true;
      } else if (text[i] == ')') {
        ++i;
        break;
      } else {
        throw fail("unexpected character");
      }
    }
    blocks.emplace_back(m);
    skip_space();
  }
  if (blocks.empty()) throw fail("no blocks");
  return from_blocks(n, blocks);
}

CoalitionStructure CoalitionStructure::singletons(int n) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

CoalitionStructure CoalitionStructure::grand(int n) {
  return from_labels(std::vector<int>(n, 0));
}

Coalition CoalitionStructure::block(int label) const {
  Mask m = 0;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) m |= Mask{1} << i;
  }
  return Coalition(m);
}

std::vector<Coalition> CoalitionStructure::blocks() const {
  std::vector<Coalition> out(num_blocks_);
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    out[labels_[i]] = out[labels_[i]].with(static_cast<int>(i));
  }
  return out;
}

std::string CoalitionStructure::to_string() const {
  std::string s;
  for (const Coalition& c : blocks()) s += c.to_string();
  return s;
}

namespace {

void check_coalition(const GameInstance& game, Coalition c) {
  if (c.empty()) throw std::invalid_argument("coalition must be non-empty");
  if ((c.mask() & ~game.all_players()) != 0) {
    throw std::invalid_argument("coalition " + c.to_string() + " names a player outside game " +
                                game.id());
  }
}

Payoff share(int value, int size, PayoffRule rule) {
  if (rule == PayoffRule::kTruncated) return Payoff(value / size, 1);
  return Payoff(value, size);
}

}  // namespace

int coalition_value(const GameInstance& game, Coalition c) {
  check_coalition(game, c);
  int l = 0;
  int r = 0;
  for (int p : c.members()) {
    l += game.left(p);
    r += game.right(p);
  }
  return std::min(l, r);
}

Payoff payoff(const GameInstance& game, Coalition c, int player, PayoffRule rule) {
  check_coalition(game, c);
  if (!c.contains(player)) {
    throw std::invalid_argument("player " + std::to_string(player) + " is not in coalition " +
                                c.to_string());
  }
  return share(coalition_value(game, c), c.size(), rule);
}

Preference prefers(const GameInstance& game, int player, Coalition a, Coalition b,
                   PayoffRule rule) {
  const auto order = payoff(game, a, player, rule) <=> payoff(game, b, player, rule);
  if (order > 0) return Preference::kPrefersFirst;
  if (order < 0) return Preference::kPrefersSecond;
  return Preference::kIndifferent;
}

std::vector<Payoff> structure_payoffs(const GameInstance& game, const CoalitionStructure& cs,
                                     PayoffRule rule) {
  if (cs.num_players() != game.num_players()) {
    throw std::invalid_argument("structure has " + std::to_string(cs.num_players()) +
                                " players, game " + game.id() + " has " +
                                std::to_string(game.num_players()));
  }
  const auto blocks = cs.blocks();
  std::vector<Payoff> out;
  out.reserve(game.num_players());
  for (int i = 0; i < game.num_players(); ++i) {
    const Coalition c = blocks[cs.label_of(i)];
    out.push_back(share(coalition_value(game, c), c.size(), rule));
  }
  return out;
}

GameInstance random_game(int n, std::uint64_t seed, int max_gloves, std::string id) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("random_game: player count must be in [1, " +
                                std::to_string(kMaxPlayers) + "], got " + std::to_string(n));
  }
  if (max_gloves < 0) throw std::invalid_argument("random_game: max_gloves must be >= 0");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> gloves(0, max_gloves);
  std::vector<int> left(n);
  std::vector<int> right(n);
  for (int i = 0; i < n; ++i) {
    left[i] = gloves(rng);
    right[i] = gloves(rng);
  }
  if (id.empty()) id = "r" + std::to_string(n) + "." + std::to_string(seed);
  return GameInstance(std::move(id), std::move(left), std::move(right));
}

CoalitionValues::CoalitionValues(const GameInstance& game, PayoffRule rule)
    : n_(game.num_players()), rule_(rule) {
  const std::size_t count = std::size_t{1} << n_;
  value_.assign(count, 0);
  share_num_.assign(count, 0);
  share_den_.assign(count, 1);
  std::vector<std::int32_t> left(count, 0);
  std::vector<std::int32_t> right(count, 0);
  for (Mask m = 1; m < count; ++m) {
    const int low = std::countr_zero(m);
    const Mask rest = m & (m - 1);
    left[m] = left[rest] + game.left(low);
    right[m] = right[rest] + game.right(low);
    value_[m] = std::min(left[m], right[m]);
    const int size = std::popcount(m);
    if (rule == PayoffRule::kTruncated) {
      share_num_[m] = value_[m] / size;
      share_den_[m] = 1;
    } else {
      share_num_[m] = value_[m];
      share_den_[m] = size;
    }
  }
}

}  // namespace glovecore

std::size_t std::hash<glovecore::CoalitionStructure>::operator()(
    const glovecore::CoalitionStructure& cs) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto l : cs.labels()) {
    h ^= l;
    h *= 1099511628211ull;
  }
  return h;
}
