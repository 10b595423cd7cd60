// Copyright 2026 The lgames Authors
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

// JSON file formats. Rationals are always strings ("3/4", "-1").
//
// Strategic game:
//   {"players": 2, "strategies": [["h","t"],["h","t"]],
//    "payoffs": [["1","0"],["0","1"],["0","1"],["1","0"]]}
// Logical game:
//   {"algebra": {"id": "L_n_C", "n": 4} or "STD_L",
//    "variables": [["v1"],["v2"]],
//    "strategies": [[["0"],["1"]], [["0"],["1"]]],
//    "payoff_formulas": ["v1 -> v2", "v2"]}
// Mixed profile (missing strategies get probability 0):
//   [{"0": "1/2", "1": "1/2"}, {"1": "1"}]
// Representation sidecar:
//   {"method": "ab_i", "c": [[["0"],["1"]], ...],
//    "g": {"kind": "affine", "a": "2", "b": "-1"}
//      or {"kind": "table", "points": [["0","-1"], ["1/2","0"]]}}

#ifndef LGAMES_IO_HPP_
#define LGAMES_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lgames/algebra.hpp"
#include "lgames/error.hpp"
#include "lgames/formula.hpp"
#include "lgames/game.hpp"
#include "lgames/rational.hpp"
#include "lgames/repr.hpp"

namespace lgames {

using Json = nlohmann::ordered_json;

namespace detail {

inline Rational json_rational(const Json& j, const std::string& where) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InputError(where + ": expected a rational string, got " + j.dump());
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  return a;
}

inline Json tuple_json(const StrategyTuple& t) {
  Json a = Json::array();
  for (const auto& x : t) a.push_back(x.str());
  return a;
}

inline StrategyTuple json_tuple(const Json& j) {
  if (!j.is_array()) throw InputError("strategy tuple must be an array of rational strings");
  StrategyTuple t;
  for (const auto& x : j) t.emplace_back(json_rational(x, "strategy tuple"));
  return t;
}

inline std::vector<std::vector<StrategyTuple>> json_tuple_table(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of per-player strategy lists");
  std::vector<std::vector<StrategyTuple>> out;
  for (const auto& per : j) {
    if (!per.is_array()) throw InputError("per-player strategy list must be an array");
    std::vector<StrategyTuple> s;
    for (const auto& t : per) s.push_back(json_tuple(t));
    out.push_back(std::move(s));
  }
  return out;
}

inline Json tuple_table_json(const std::vector<std::vector<StrategyTuple>>& table) {
  Json a = Json::array();
  for (const auto& per : table) {
    Json p = Json::array();
    for (const auto& t : per) p.push_back(tuple_json(t));
    a.push_back(std::move(p));
  }
  return a;
}

}  // namespace detail

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

inline Json to_json(const StrategicGame& g) {
  Json j;
  j["players"] = g.players();
  j["strategies"] = g.strategy_names();
  Json pay = Json::array();
  for (const auto& row : g.payoff_table()) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.str());
    pay.push_back(std::move(r));
  }
  j["payoffs"] = std::move(pay);
  return j;
}

inline StrategicGame strategic_game_from_json(const Json& j) {
  try {
    const Json& players = detail::field(j, "players");
    if (!players.is_number_integer()) throw InputError("'players' must be an integer");
    std::vector<std::vector<std::string>> names;
    for (const auto& per : detail::array_field(j, "strategies")) {
      if (!per.is_array()) throw InputError("per-player strategy names must be an array");
      std::vector<std::string> ns;
      for (const auto& s : per) {
        if (!s.is_string()) throw InputError("strategy names must be strings");
        ns.push_back(s.get<std::string>());
      }
      names.push_back(std::move(ns));
    }
    if (players.get<long>() != static_cast<long>(names.size())) {
      throw InputError("'players' does not match the number of strategy lists");
    }
    std::vector<std::vector<Rational>> pay;
    for (const auto& row : detail::array_field(j, "payoffs")) {
      if (!row.is_array()) throw InputError("payoff entries must be arrays");
      std::vector<Rational> r;
      for (const auto& x : row) r.push_back(detail::json_rational(x, "payoffs"));
      pay.push_back(std::move(r));
    }
    return StrategicGame(std::move(names), std::move(pay));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed game file: ") + e.what());
  }
}

inline Json algebra_json(const Algebra& a) {
  if (!a.chain() || a.id() == AlgebraId::kBool2) return Json(std::string(a.catalog_id()));
  Json j;
  j["id"] = std::string(a.catalog_id());
  j["n"] = *a.chain();
  return j;
}

inline Algebra algebra_from_json(const Json& j) {
  if (j.is_string()) return parse_algebra(j.get<std::string>());
  if (j.is_object()) {
    const Json& id = detail::field(j, "id");
    if (!id.is_string()) throw InputError("algebra id must be a string");
    std::optional<int> n;
    if (j.contains("n")) {
      if (!j.at("n").is_number_integer()) throw InputError("algebra parameter n must be an integer");
      n = j.at("n").get<int>();
    }
    return catalog_lookup(id.get<std::string>(), n);
  }
  throw InputError("algebra must be a string or an object with 'id' and optional 'n'");
}

inline Json to_json(const LogicalGame& lg) {
  Json j;
  j["algebra"] = algebra_json(lg.algebra());
  j["variables"] = lg.variables();
  j["strategies"] = detail::tuple_table_json(lg.strategies());
  Json f = Json::array();
  for (const auto& phi : lg.payoff_formulas()) f.push_back(print(phi));
  j["payoff_formulas"] = std::move(f);
  return j;
}

inline LogicalGame logical_game_from_json(const Json& j) {
  try {
    Algebra alg = algebra_from_json(detail::field(j, "algebra"));
    std::vector<std::vector<std::string>> vars;
    for (const auto& per : detail::array_field(j, "variables")) {
      if (!per.is_array()) throw InputError("per-player variables must be an array");
      std::vector<std::string> vs;
      for (const auto& v : per) {
        if (!v.is_string()) throw InputError("variable names must be strings");
        vs.push_back(v.get<std::string>());
      }
      vars.push_back(std::move(vs));
    }
    auto strategies = detail::json_tuple_table(detail::array_field(j, "strategies"));
    std::vector<Formula> phi;
    for (const auto& f : detail::array_field(j, "payoff_formulas")) {
      if (!f.is_string()) throw InputError("payoff formulas must be strings");
      phi.push_back(parse_formula(f.get<std::string>()));
    }
    return LogicalGame(alg, vars, strategies, phi);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed logical game file: ") + e.what());
  }
}

inline Json to_json(const MixedProfile& mp) {
  Json j = Json::array();
  for (const auto& per : mp) {
    Json m = Json::object();
    for (std::size_t s = 0; s < per.size(); ++s) {
      if (per[s].sign() != 0) m[std::to_string(s)] = per[s].str();
    }
    j.push_back(std::move(m));
  }
  return j;
}

// Strategy ids are decimal indices; unlisted strategies get probability 0.
inline MixedProfile mixed_profile_from_json(const Json& j, const std::vector<std::size_t>& counts) {
  if (!j.is_array()) throw InputError("mixed profile must be an array of per-player maps");
  if (j.size() != counts.size()) {
    throw InputError("mixed profile lists " + std::to_string(j.size()) + " players, the game has " +
                     std::to_string(counts.size()));
  }
  MixedProfile mp;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (!j[i].is_object()) throw InputError("per-player mixed strategy must be an object");
    std::vector<Rational> v(counts[i], Rational(0));
    for (const auto& [key, val] : j[i].items()) {
      std::size_t s = 0;
      try {
        std::size_t used = 0;
        s = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InputError("strategy id '" + key + "' is not an index");
      }
      if (s >= counts[i]) throw InputError("strategy id " + key + " out of range for player " + std::to_string(i + 1));
      v[s] = detail::json_rational(val, "mixed profile");
    }
    mp.push_back(std::move(v));
  }
  return mp;
}

inline Json payoff_map_json(const PayoffMap& g) {
  Json j;
  if (g.kind() == PayoffMap::Kind::kAffine) {
    j["kind"] = "affine";
    j["a"] = g.slope().str();
    j["b"] = g.intercept().str();
  } else {
    j["kind"] = "table";
    Json pts = Json::array();
    for (const auto& [x, y] : g.points()) pts.push_back(Json::array({x.str(), y.str()}));
    j["points"] = std::move(pts);
  }
  return j;
}

inline PayoffMap payoff_map_from_json(const Json& j) {
  const Json& kind = detail::field(j, "kind");
  if (kind == "affine") {
    return PayoffMap::affine(detail::json_rational(detail::field(j, "a"), "g.a"),
                             detail::json_rational(detail::field(j, "b"), "g.b"));
  }
  if (kind == "table") {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& p : detail::array_field(j, "points")) {
      if (!p.is_array() || p.size() != 2) throw InputError("table points must be [x, y] pairs");
      pts.emplace_back(detail::json_rational(p[0], "g.points"), detail::json_rational(p[1], "g.points"));
    }
    return PayoffMap::table(std::move(pts));
  }
  throw InputError("unknown payoff map kind " + kind.dump());
}

inline Json representation_sidecar(const Representation& rep, const std::string& method) {
  Json j;
  j["method"] = method;
  j["c"] = detail::tuple_table_json(rep.c);
  j["g"] = payoff_map_json(rep.g);
  return j;
}

inline Representation representation_from_json(const StrategicGame& source, const LogicalGame& target,
                                                const Json& sidecar) {
  try {
    return Representation{source, target, detail::json_tuple_table(detail::field(sidecar, "c")),
                          payoff_map_from_json(detail::field(sidecar, "g"))};
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed representation file: ") + e.what());
  }
}

}  // namespace lgames

#endif  // LGAMES_IO_HPP_
