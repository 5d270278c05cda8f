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

// File formats.
//
// Game instances are JSON objects {"id", "n", "left", "right"}; a file holds
// one object or an array of them. Core-set files record the game, the payoff
// rule and every core structure in block notation with its exact payoffs.

#ifndef GLOVECORE_IO_HPP
#define GLOVECORE_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "glovecore/core_solver.hpp"
#include "glovecore/game.hpp"

namespace glovecore {

// I/O or format failure; the message names the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string games_to_text(const std::vector<GameInstance>& games);
std::vector<GameInstance> games_from_text(std::string_view text);

std::vector<GameInstance> read_games(const std::filesystem::path& path);
void write_games(const std::filesystem::path& path, const std::vector<GameInstance>& games);

std::string core_set_to_text(const GameInstance& game, const CoreSet& core);
// Validates that the document belongs to `game` and recomputes nothing.
CoreSet core_set_from_text(const GameInstance& game, std::string_view text);

void write_core_set(const std::filesystem::path& path, const GameInstance& game,
                    const CoreSet& core);
CoreSet read_core_set(const std::filesystem::path& path, const GameInstance& game);

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

// Stable 64-bit fingerprint of the endowments (the id is not included).
std::uint64_t instance_hash(const GameInstance& game);

}  // namespace glovecore

#endif  // GLOVECORE_IO_HPP
