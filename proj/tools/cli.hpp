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

#ifndef GLOVECORE_TOOLS_CLI_HPP
#define GLOVECORE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "glovecore/game.hpp"

namespace glovecore::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

// Resolves "builtin:gN.M", a game file holding exactly one instance, or
// "path#id" for one instance of a multi-game file.
GameInstance resolve_game(const std::string& spec);

// Resolves "builtin" (the 70 built-in games) or a game file.
std::vector<GameInstance> resolve_games(const std::string& spec);

// argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace glovecore::cli

#endif  // GLOVECORE_TOOLS_CLI_HPP
