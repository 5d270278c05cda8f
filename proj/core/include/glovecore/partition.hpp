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

// Exhaustive enumeration of coalition structures and coalitions.

#ifndef GLOVECORE_PARTITION_HPP
#define GLOVECORE_PARTITION_HPP

#include <cstdint>
#include <iterator>
#include <ranges>
#include <span>
#include <stdexcept>
#include <vector>

#include "glovecore/game.hpp"

namespace glovecore {

// Stateful cursor over all set partitions of {0..n-1}, visited as restricted
// growth strings in lexicographic order starting from the grand coalition
// (all labels 0) and ending at all singletons.
class PartitionCursor {
 public:
  explicit PartitionCursor(int n);

  int num_players() const { return static_cast<int>(labels_.size()); }
  bool done() const { return done_; }
  std::span<const std::uint8_t> labels() const { return labels_; }
  // Number of blocks in the current partition.
  int num_blocks() const { return prefix_max_.back() + 1; }
  CoalitionStructure current() const;

  // Moves to the successor; returns false (and sets done) after the last one.
  bool advance();

 private:
  std::vector<std::uint8_t> labels_;
  // prefix_max_[i] = max(labels_[0..i])
  std::vector<std::uint8_t> prefix_max_;
  bool done_ = false;
};

// Lazy single-pass range over every coalition structure of n players.
class PartitionRange : public std::ranges::view_interface<PartitionRange> {
 public:
  class iterator {
   public:
    using value_type = CoalitionStructure;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(PartitionCursor* cursor) : cursor_(cursor) {}

    CoalitionStructure operator*() const { return cursor_->current(); }
    iterator& operator++() {
      cursor_->advance();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.cursor_->done();
    }

   private:
    PartitionCursor* cursor_ = nullptr;
  };

  explicit PartitionRange(int n) : cursor_(n) {}

  iterator begin() { return iterator(&cursor_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  PartitionCursor cursor_;
};

// Throws std::invalid_argument unless 1 <= n <= kMaxPlayers.
PartitionRange all_partitions(int n);

// Masks 1 .. 2^n - 1 in increasing order.
inline auto all_coalitions(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("all_coalitions: player count out of range");
  }
  return std::views::iota(Mask{1}, Mask{1} << n) |
         std::views::transform([](Mask m) { return Coalition(m); });
}

// Bell numbers through the Bell triangle; defined for 0 <= n <= 25.
std::uint64_t bell_number(int n);

}  // namespace glovecore

#endif  // GLOVECORE_PARTITION_HPP
