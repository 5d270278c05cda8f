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

#include <doctest.h>

#include <filesystem>

#include "glovecore/builtin_games.hpp"
#include "glovecore/core_solver.hpp"
#include "glovecore/io.hpp"

using namespace glovecore;

namespace {

std::filesystem::path scratch(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / "glovecore_test_io";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("game files round-trip") {
  const std::vector<GameInstance> games = {random_game(5, 1, 9, "a"), random_game(9, 2, 9, "b")};
  const std::string text = games_to_text(games);
  const auto back = games_from_text(text);
  REQUIRE(back.size() == 2);
  CHECK(back[1].id() == "b");
  CHECK(std::vector<int>(back[1].left().begin(), back[1].left().end()) ==
        std::vector<int>(games[1].left().begin(), games[1].left().end()));
  CHECK(games_to_text(back) == text);

  const auto path = scratch("games.json");
  write_games(path, games);
  CHECK(read_text(path) == text);
  CHECK(games_to_text(read_games(path)) == text);
}

TEST_CASE("a single object is accepted") {
  const auto g = games_from_text(R"({"id":"x","n":2,"left":[1,0],"right":[0,1]})");
  REQUIRE(g.size() == 1);
  CHECK(g[0].num_players() == 2);
}

TEST_CASE("malformed game files are rejected") {
  CHECK_THROWS_AS(games_from_text("not json"), IoError);
  CHECK_THROWS_AS(games_from_text(R"({"id":"x","n":1,"left":[1],"right":[0,1]})"), IoError);
  CHECK_THROWS_AS(games_from_text(R"([{"id":"x","n":1,"left":[-1],"right":[0]}])"), IoError);
  CHECK_THROWS_AS(read_games("/nonexistent/dir/games.json"), IoError);
}

TEST_CASE("core-set files round-trip") {
  const auto& g = *builtin_game("g8.1");
  const CoreSet core = core_set(g);
  const std::string text = core_set_to_text(g, core);
  const CoreSet back = core_set_from_text(g, text);
  CHECK(back.members == core.members);
  CHECK(back.rule == core.rule);
  CHECK(core_set_to_text(g, back) == text);
  CHECK(text.find("\"7/2\"") == std::string::npos);
  CHECK_THROWS_AS(core_set_from_text(*builtin_game("g8.2"), text), IoError);

  const auto path = scratch("core.json");
  write_core_set(path, g, core);
  CHECK(read_core_set(path, g).members == core.members);
}

TEST_CASE("instance hash ignores the id and sees the gloves") {
  const GameInstance a("a", {1, 2}, {3, 4});
  CHECK(instance_hash(a) == instance_hash(GameInstance("b", {1, 2}, {3, 4})));
  CHECK(instance_hash(a) != instance_hash(GameInstance("a", {2, 1}, {3, 4})));
}

TEST_CASE("the shipped game file matches the built-in set") {
  const auto path = std::filesystem::path(GLOVECORE_DATA_DIR) / "builtin_games.json";
  CHECK(read_text(path) == games_to_text(builtin_games()));
  CHECK(builtin_games().size() == 70);
  CHECK_FALSE(builtin_game("g10.1"));
}
