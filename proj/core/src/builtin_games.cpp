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

#include "glovecore/builtin_games.hpp"

#include <algorithm>

namespace glovecore {

namespace {

struct Row {
  const char* id;
  std::vector<int> left;
  std::vector<int> right;
};

std::vector<GameInstance> build() {
  const std::vector<Row> rows = {
      {"g3.1", {3, 2, 1}, {3, 3, 2}},
      {"g3.2", {2, 2, 2}, {1, 0, 0}},
      {"g3.3", {4, 4, 3}, {3, 4, 4}},
      {"g3.4", {4, 3, 1}, {3, 3, 3}},
      {"g3.5", {3, 0, 2}, {0, 0, 3}},
      {"g3.6", {0, 0, 3}, {3, 2, 1}},
      {"g3.7", {0, 6, 1}, {9, 9, 0}},
      {"g3.8", {2, 5, 8}, {4, 4, 1}},
      {"g3.9", {7, 2, 0}, {3, 6, 4}},
      {"g3.10", {1, 0, 4}, {0, 4, 6}},
      {"g4.1", {0, 1, 9, 6}, {4, 5, 0, 6}},
      {"g4.2", {9, 8, 8, 1}, {8, 5, 1, 0}},
      {"g4.3", {3, 9, 6, 0}, {7, 3, 4, 4}},
      {"g4.4", {4, 1, 6, 9}, {1, 4, 7, 2}},
      {"g4.5", {2, 2, 1, 2}, {8, 0, 2, 9}},
      {"g4.6", {1, 6, 2, 0}, {3, 5, 8, 8}},
      {"g4.7", {4, 4, 7, 8}, {9, 0, 6, 9}},
      {"g4.8", {0, 0, 7, 8}, {7, 7, 9, 5}},
      {"g4.9", {4, 0, 2, 0}, {7, 8, 0, 1}},
      {"g4.10", {4, 3, 1, 7}, {3, 6, 0, 1}},
      {"g5.1", {7, 2, 2, 7, 0}, {6, 7, 1, 8, 6}},
      {"g5.2", {7, 7, 1, 3, 8}, {3, 5, 1, 3, 1}},
      {"g5.3", {7, 0, 3, 5, 3}, {1, 6, 6, 2, 7}},
      {"g5.4", {1, 7, 1, 6, 3}, {0, 8, 0, 2, 9}},
      {"g5.5", {4, 1, 8, 7, 2}, {6, 3, 6, 1, 1}},
      {"g5.6", {9, 2, 5, 4, 0}, {3, 6, 6, 4, 1}},
      {"g5.7", {2, 9, 5, 4, 5}, {8, 7, 0, 7, 4}},
      {"g5.8", {2, 2, 2, 0, 7}, {0, 1, 8, 6, 0}},
      {"g5.9", {5, 0, 1, 0, 6}, {4, 0, 4, 7, 2}},
      {"g5.10", {8, 0, 2, 9, 1}, {2, 8, 2, 0, 3}},
      {"g6.1", {9, 5, 4, 6, 1, 8}, {3, 8, 9, 3, 5, 7}},
      {"g6.2", {7, 9, 1, 0, 6, 5}, {3, 2, 3, 5, 1, 8}},
      {"g6.3", {9, 6, 7, 8, 5, 8}, {0, 9, 7, 2, 0, 1}},
      {"g6.4", {8, 9, 3, 5, 4, 0}, {4, 1, 8, 0, 5, 1}},
      {"g6.5", {3, 2, 4, 2, 3, 7}, {4, 0, 8, 7, 2, 7}},
      {"g6.6", {1, 0, 0, 3, 8, 7}, {6, 8, 1, 3, 3, 8}},
      {"g6.7", {4, 1, 1, 3, 8, 6}, {4, 8, 1, 1, 5, 9}},
      {"g6.8", {9, 2, 4, 4, 4, 7}, {8, 8, 1, 1, 3, 0}},
      {"g6.9", {8, 9, 5, 2, 1, 4}, {4, 3, 1, 3, 8, 1}},
      {"g6.10", {5, 2, 5, 0, 9, 0}, {6, 3, 2, 0, 3, 7}},
      {"g7.1", {1, 2, 9, 6, 1, 8, 2}, {8, 6, 6, 6, 8, 3, 0}},
      {"g7.2", {6, 4, 8, 6, 7, 6, 5}, {4, 5, 5, 8, 8, 1, 1}},
      {"g7.3", {1, 2, 0, 3, 5, 9, 0}, {8, 5, 6, 3, 3, 5, 8}},
      {"g7.4", {6, 9, 9, 3, 6, 7, 4}, {5, 9, 3, 4, 9, 6, 4}},
      {"g7.5", {2, 4, 1, 1, 7, 8, 6}, {6, 4, 0, 7, 7, 0, 0}},
      {"g7.6", {4, 6, 2, 4, 4, 2, 0}, {0, 8, 8, 5, 8, 3, 8}},
      {"g7.7", {3, 6, 4, 9, 7, 6, 3}, {5, 9, 3, 0, 0, 4, 8}},
      {"g7.8", {0, 9, 8, 3, 2, 3, 3}, {6, 3, 0, 8, 2, 4, 5}},
      {"g7.9", {8, 2, 9, 5, 4, 6, 9}, {4, 6, 3, 7, 0, 2, 3}},
      {"g7.10", {6, 2, 6, 1, 7, 0, 8}, {5, 2, 7, 7, 3, 6, 5}},
      {"g8.1", {0, 2, 9, 0, 6, 2, 3, 7}, {4, 4, 4, 8, 3, 1, 5, 9}},
      {"g8.2", {7, 3, 8, 4, 0, 0, 1, 5}, {6, 7, 2, 1, 5, 2, 6, 2}},
      {"g8.3", {9, 4, 6, 0, 6, 2, 4, 8}, {1, 8, 4, 0, 1, 9, 7, 8}},
      {"g8.4", {9, 1, 5, 5, 5, 7, 6, 5}, {4, 6, 3, 1, 9, 5, 5, 0}},
      {"g8.5", {3, 6, 1, 8, 2, 6, 6, 3}, {9, 0, 2, 7, 1, 6, 6, 7}},
      {"g8.6", {0, 3, 6, 0, 1, 0, 7, 8}, {0, 0, 7, 5, 4, 1, 9, 0}},
      {"g8.7", {8, 2, 3, 0, 6, 6, 2, 5}, {9, 5, 4, 1, 8, 5, 3, 5}},
      {"g8.8", {7, 8, 5, 5, 4, 4, 9, 5}, {0, 8, 3, 5, 5, 6, 3, 4}},
      {"g8.9", {4, 0, 8, 8, 6, 9, 5, 7}, {0, 4, 7, 7, 1, 5, 5, 9}},
      {"g8.10", {8, 4, 6, 1, 1, 1, 7, 7}, {6, 3, 2, 1, 2, 6, 3, 6}},
      {"g9.1", {4, 1, 1, 1, 6, 0, 5, 1, 4}, {0, 7, 7, 4, 2, 0, 6, 0, 0}},
      {"g9.2", {1, 9, 8, 5, 4, 4, 7, 9, 9}, {1, 3, 9, 9, 4, 9, 9, 6, 5}},
      {"g9.3", {5, 4, 9, 0, 7, 1, 8, 0, 8}, {4, 1, 8, 6, 6, 5, 8, 1, 7}},
      {"g9.4", {5, 4, 6, 5, 0, 3, 4, 6, 7}, {1, 2, 2, 9, 5, 1, 3, 9, 7}},
      {"g9.5", {1, 1, 2, 5, 2, 3, 4, 2, 8}, {9, 2, 6, 7, 4, 8, 4, 2, 0}},
      {"g9.6", {3, 2, 5, 2, 7, 8, 1, 6, 4}, {4, 7, 6, 5, 1, 3, 4, 8, 2}},
      {"g9.7", {2, 4, 3, 4, 5, 9, 2, 3, 2}, {7, 5, 5, 8, 1, 9, 6, 5, 3}},
      {"g9.8", {0, 4, 5, 5, 5, 1, 7, 8, 9}, {3, 8, 2, 3, 0, 3, 1, 6, 6}},
      {"g9.9", {8, 9, 8, 4, 7, 5, 2, 8, 2}, {9, 9, 9, 5, 0, 6, 5, 2, 3}},
      {"g9.10", {1, 4, 1, 4, 8, 0, 5, 0, 9}, {5, 0, 8, 6, 4, 2, 8, 0, 0}},
  };
  std::vector<GameInstance> games;
  games.reserve(rows.size());
  for (const Row& r : rows) games.emplace_back(r.id, r.left, r.right);
  return games;
}

}  // namespace

const std::vector<GameInstance>& builtin_games() {
  static const std::vector<GameInstance> games = build();
  return games;
}

const GameInstance* builtin_game(std::string_view id) {
  const auto& games = builtin_games();
  auto it = std::ranges::find(games, id, &GameInstance::id);
  return it == games.end() ? nullptr : &*it;
}

}  // namespace glovecore
