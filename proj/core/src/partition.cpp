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

#include "glovecore/partition.hpp"

#include <stdexcept>
#include <string>

namespace glovecore {

PartitionCursor::PartitionCursor(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("partition enumeration: player count must be in [1, " +
                                std::to_string(kMaxPlayers) + "], got " + std::to_string(n));
  }
  labels_.assign(n, 0);
  prefix_max_.assign(n, 0);
}

CoalitionStructure PartitionCursor::current() const {
  std::vector<int> labels(labels_.begin(), labels_.end());
  return CoalitionStructure::from_labels(labels);
}

bool PartitionCursor::advance() {
  if (done_) return false;
  const int n = num_players();
  // The rightmost position that may still grow: labels_[i] <= max of the
  // prefix before it.
  for (int i = n - 1; i >= 1; --i) {
    if (labels_[i] <= prefix_max_[i - 1]) {
      ++labels_[i];
      prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
      for (int j = i + 1; j < n; ++j) {
        labels_[j] = 0;
        prefix_max_[j] = prefix_max_[i];
      }
      return true;
    }
  }
  done_ = true;
  return false;
}

PartitionRange all_partitions(int n) { return PartitionRange(n); }

std::uint64_t bell_number(int n) {
  if (n < 0 || n > 25) throw std::invalid_argument("bell_number: n must be in [0, 25]");
  // Each row of the triangle starts with the last entry of the previous row;
  // the first entry of row n is Bell(n).
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace glovecore
