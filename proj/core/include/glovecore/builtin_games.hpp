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

// Built-in benchmark instances: ten glove games for each player count 3..9.

#ifndef GLOVECORE_BUILTIN_GAMES_HPP
#define GLOVECORE_BUILTIN_GAMES_HPP

#include <string_view>
#include <vector>

#include "glovecore/game.hpp"

namespace glovecore {

// Ids are "g<n>.<row>", e.g. "g8.1", rows numbered from 1.
const std::vector<GameInstance>& builtin_games();

// Null when no built-in game has this id.
const GameInstance* builtin_game(std::string_view id);

}  // namespace glovecore

#endif  // GLOVECORE_BUILTIN_GAMES_HPP
