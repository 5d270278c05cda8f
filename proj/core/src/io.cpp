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

#include "glovecore/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace glovecore {

using nlohmann::json;

namespace {

json game_to_json(const GameInstance& g) {
  json j;
  j["id"] = g.id();
  j["n"] = g.num_players();
  j["left"] = std::vector<int>(g.left().begin(), g.left().end());
  j["right"] = std::vector<int>(g.right().begin(), g.right().end());
  return j;
}

GameInstance game_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("game instance must be a JSON object");
  for (const char* key : {"id", "n", "left", "right"}) {
    if (!j.contains(key)) throw std::invalid_argument(std::string("game instance lacks \"") + key + "\"");
  }
  auto gloves = [](const json& a, const char* what) {
    if (!a.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& v : a) {
      if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " must hold integers");
      out.push_back(v.get<int>());
    }
    return out;
  };
  const std::string id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
  if (!j["n"].is_number_integer()) throw std::invalid_argument("\"n\" must be an integer");
  GameInstance g(id, gloves(j["left"], "left"), gloves(j["right"], "right"));
  if (g.num_players() != j["n"].get<int>()) {
    throw std::invalid_argument("game " + id + ": \"n\" disagrees with the endowment arrays");
  }
  return g;
}

}  // namespace

std::string games_to_text(const std::vector<GameInstance>& games) {
  json a = json::array();
  for (const auto& g : games) a.push_back(game_to_json(g));
  return a.dump(2) + "\n";
}

std::vector<GameInstance> games_from_text(std::string_view text) {
  try {
    const json j = json::parse(text);
    std::vector<GameInstance> out;
    if (j.is_array()) {
      for (const auto& item : j) out.push_back(game_from_json(item));
    } else {
      out.push_back(game_from_json(j));
    }
    return out;
  } catch (const std::exception& e) {
    // json errors and GameInstance validation both end up here.
    throw IoError(e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("write to " + path.string() + " failed");
}

std::vector<GameInstance> read_games(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  try {
    return games_from_text(text);
  } catch (const std::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_games(const std::filesystem::path& path, const std::vector<GameInstance>& games) {
  write_text(path, games_to_text(games));
}

std::string core_set_to_text(const GameInstance& game, const CoreSet& core) {
  json j;
  j["game"] = game_to_json(game);
  j["rule"] = std::string(to_string(core.rule));
  j["partitions_examined"] = core.partitions_examined;
  j["coalitions_examined"] = core.coalitions_examined;
  j["core_size"] = core.size();
  json members = json::array();
  for (const auto& cs : core.members) {
    json payoffs = json::array();
    for (const Payoff& p : structure_payoffs(game, cs, core.rule)) payoffs.push_back(p.to_string());
    members.push_back({{"partition", cs.to_string()}, {"payoffs", payoffs}});
  }
  j["core"] = members;
  return j.dump(2) + "\n";
}

namespace {

CoreSet parse_core_set(const GameInstance& game, std::string_view text) {
  const json j = json::parse(text);
  const GameInstance stored = game_from_json(j.at("game"));
  if (stored.left().size() != game.left().size() ||
      !std::equal(stored.left().begin(), stored.left().end(), game.left().begin()) ||
      !std::equal(stored.right().begin(), stored.right().end(), game.right().begin())) {
    throw std::invalid_argument("core-set file belongs to a different game");
  }
  CoreSet core;
  core.game_id = game.id();
  core.num_players = game.num_players();
  core.rule = parse_payoff_rule(j.at("rule").get<std::string>());
  core.partitions_examined = j.at("partitions_examined").get<std::uint64_t>();
  core.coalitions_examined = j.at("coalitions_examined").get<std::uint64_t>();
  for (const auto& m : j.at("core")) {
    core.members.push_back(
        CoalitionStructure::parse(m.at("partition").get<std::string>(), game.num_players()));
  }
  if (core.members.size() != j.at("core_size").get<std::size_t>()) {
    throw std::invalid_argument("core-set file: core_size disagrees with the member list");
  }
  return core;
}

}  // namespace

CoreSet core_set_from_text(const GameInstance& game, std::string_view text) {
  try {
    return parse_core_set(game, text);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
}

void write_core_set(const std::filesystem::path& path, const GameInstance& game,
                    const CoreSet& core) {
  write_text(path, core_set_to_text(game, core));
}

CoreSet read_core_set(const std::filesystem::path& path, const GameInstance& game) {
  const std::string text = read_text(path);
  try {
    return core_set_from_text(game, text);
  } catch (const std::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

std::uint64_t instance_hash(const GameInstance& game) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      h ^= (v >> (8 * k)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(game.num_players()));
  for (int v : game.left()) mix(static_cast<std::uint64_t>(v));
  for (int v : game.right()) mix(static_cast<std::uint64_t>(v));
  return h;
}

}  // namespace glovecore
