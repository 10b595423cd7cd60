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

// Finite strategic games and logical games.
//
// Strategies are identified with their position 0..|S_i|-1 in the player's
// strategy list, and a profile is one such index per player. Profiles are
// enumerated in row-major order with player 1 varying slowest, which is also
// the lexicographic order on index vectors.

#ifndef LGAMES_GAME_HPP_
#define LGAMES_GAME_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lgames/algebra.hpp"
#include "lgames/error.hpp"
#include "lgames/formula.hpp"
#include "lgames/rational.hpp"

namespace lgames {

using Profile = std::vector<std::size_t>;

inline std::size_t profile_count(const std::vector<std::size_t>& counts) {
  std::size_t total = 1;
  for (std::size_t c : counts) total *= c;
  return total;
}

inline std::size_t profile_index(const std::vector<std::size_t>& counts, const Profile& p) {
  if (p.size() != counts.size()) {
    throw InputError("profile has " + std::to_string(p.size()) + " entries, expected " +
                     std::to_string(counts.size()));
  }
  std::size_t idx = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (p[i] >= counts[i]) {
      throw InputError("strategy " + std::to_string(p[i]) + " out of range for player " + std::to_string(i + 1));
    }
    idx = idx * counts[i] + p[i];
  }
  return idx;
}

inline Profile profile_at(const std::vector<std::size_t>& counts, std::size_t idx) {
  Profile p(counts.size());
  for (std::size_t i = counts.size(); i-- > 0;) {
    p[i] = idx % counts[i];
    idx /= counts[i];
  }
  return p;
}

inline std::vector<Profile> all_profiles(const std::vector<std::size_t>& counts) {
  std::vector<Profile> out;
  std::size_t total = profile_count(counts);
  out.reserve(total);
  for (std::size_t k = 0; k < total; ++k) out.push_back(profile_at(counts, k));
  return out;
}

inline std::string profile_str(const Profile& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

// Classical finite game in normal form with rational payoffs.
class StrategicGame {
 public:
  StrategicGame() = default;

  // payoffs[k] holds every player's payoff at the k-th profile.
  StrategicGame(std::vector<std::vector<std::string>> strategy_names,
                std::vector<std::vector<Rational>> payoffs)
      : names_(std::move(strategy_names)), payoffs_(std::move(payoffs)) {
    if (names_.empty()) throw InputError("a game needs at least one player");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InputError("player " + std::to_string(i + 1) + " has no strategies");
      counts_.push_back(names_[i].size());
    }
    if (payoffs_.size() != lgames::profile_count(counts_)) {
      throw InputError("expected " + std::to_string(lgames::profile_count(counts_)) + " payoff entries, got " +
                       std::to_string(payoffs_.size()));
    }
    for (std::size_t k = 0; k < payoffs_.size(); ++k) {
      if (payoffs_[k].size() != names_.size()) {
        throw InputError("payoff entry " + std::to_string(k) + " has " + std::to_string(payoffs_[k].size()) +
                         " values, expected " + std::to_string(names_.size()));
      }
    }
  }

  // Strategies named "0", "1", ...; payoffs computed per profile.
  static StrategicGame from_function(const std::vector<std::size_t>& counts,
                                     const std::function<std::vector<Rational>(const Profile&)>& f) {
    std::vector<std::vector<std::string>> names;
    for (std::size_t c : counts) {
      std::vector<std::string> ns;
      for (std::size_t s = 0; s < c; ++s) ns.push_back(std::to_string(s));
      names.push_back(std::move(ns));
    }
    std::vector<std::vector<Rational>> pay;
    for (const auto& p : all_profiles(counts)) pay.push_back(f(p));
    return StrategicGame(std::move(names), std::move(pay));
  }

  std::size_t players() const { return names_.size(); }
  const std::vector<std::size_t>& strategy_counts() const { return counts_; }
  std::size_t strategy_count(std::size_t i) const { return counts_.at(i); }
  const std::vector<std::vector<std::string>>& strategy_names() const { return names_; }
  std::size_t profile_count() const { return payoffs_.size(); }
  const std::vector<std::vector<Rational>>& payoff_table() const { return payoffs_; }

  const std::vector<Rational>& payoffs(const Profile& p) const { return payoffs_[profile_index(counts_, p)]; }
  const Rational& payoff(std::size_t player, const Profile& p) const { return payoffs(p).at(player); }

  // Distinct payoff values over all players and profiles, increasing.
  std::vector<Rational> payoff_values() const {
    std::set<Rational> s;
    for (const auto& row : payoffs_) s.insert(row.begin(), row.end());
    return {s.begin(), s.end()};
  }

  // Same game with f_i replaced by t(i, f_i).
  StrategicGame transform(const std::function<Rational(std::size_t, const Rational&)>& t) const {
    auto pay = payoffs_;
    for (auto& row : pay) {
      for (std::size_t i = 0; i < row.size(); ++i) row[i] = t(i, row[i]);
    }
    return StrategicGame(names_, std::move(pay));
  }

  friend bool operator==(const StrategicGame& a, const StrategicGame& b) {
    return a.names_ == b.names_ && a.payoffs_ == b.payoffs_;
  }

 private:
  std::vector<std::vector<std::string>> names_;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<Rational>> payoffs_;
};

using StrategyTuple = std::vector<TruthValue>;

inline std::string tuple_str(const StrategyTuple& t) {
  std::string s;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (j) s += ",";
    s += t[j].str();
  }
  return s;
}

enum class Tri : std::uint8_t { kNo, kYes, kUnknown };

inline std::string_view tri_str(Tri t) {
  switch (t) {
    case Tri::kNo: return "no";
    case Tri::kYes: return "yes";
    case Tri::kUnknown: return "unknown";
  }
  return "?";
}

struct Classification {
  bool basic = false;
  bool finite = true;
  Tri full = Tri::kUnknown;
  bool expressible = false;
  bool weakly_expressible = false;
};

// Whether a one-variable formula valued 1 exactly at `a` is available in alg.
// Truth constants give (p -> a) /\ (a -> p); on Lukasiewicz carriers every
// rational has one without constants.
inline bool has_pseudo_char(const Algebra& alg, const Rational& a) {
  if (!alg.contains(a)) return false;
  return alg.has_constant(a) || alg.is_mv();
}

// Game whose strategies assign algebra values to controlled variables and
// whose payoffs are formula values.
class LogicalGame {
 public:
  LogicalGame(Algebra alg, std::vector<std::vector<std::string>> variables,
              std::vector<std::vector<StrategyTuple>> strategies, std::vector<Formula> payoffs)
      : alg_(std::move(alg)),
        vars_(std::move(variables)),
        strategies_(std::move(strategies)),
        formulas_(std::move(payoffs)) {
    const std::size_t n = vars_.size();
    if (n == 0) throw InputError("a game needs at least one player");
    if (strategies_.size() != n || formulas_.size() != n) {
      throw InputError("variables, strategies and payoff formulas must list the same number of players");
    }
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& v : vars_[i]) {
        if (v.find("__") != std::string::npos) {
          throw InputError("variable name '" + v + "' is reserved (contains \"__\")");
        }
        if (!seen.insert(v).second) throw SemanticError("variable '" + v + "' is controlled twice");
        all_vars_.push_back(v);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (strategies_[i].empty()) throw SemanticError("player " + std::to_string(i + 1) + " has no strategies");
      std::set<std::vector<Rational>> distinct;
      for (const auto& t : strategies_[i]) {
        if (t.size() != vars_[i].size()) {
          throw SemanticError("strategy (" + tuple_str(t) + ") of player " + std::to_string(i + 1) + " has " +
                              std::to_string(t.size()) + " components, expected " +
                              std::to_string(vars_[i].size()));
        }
        std::vector<Rational> key;
        for (const auto& x : t) {
          if (!alg_.contains(x)) {
            throw DomainError("strategy value " + x.str() + " is outside the domain of " + alg_.name());
          }
          key.push_back(x.value());
        }
        if (!distinct.insert(key).second) {
          throw SemanticError("duplicate strategy (" + tuple_str(t) + ") for player " + std::to_string(i + 1));
        }
      }
      counts_.push_back(strategies_[i].size());
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& v : free_variables(formulas_[i])) {
        if (!seen.count(v)) {
          throw SemanticError("payoff formula of player " + std::to_string(i + 1) + " uses uncontrolled variable '" +
                              v + "'");
        }
      }
      compiled_.emplace_back(formulas_[i], alg_, all_vars_);
    }
  }

  const Algebra& algebra() const { return alg_; }
  std::size_t players() const { return vars_.size(); }
  const std::vector<std::vector<std::string>>& variables() const { return vars_; }
  const std::vector<std::string>& variables(std::size_t i) const { return vars_.at(i); }
  // V in player order.
  const std::vector<std::string>& all_variables() const { return all_vars_; }
  const std::vector<std::vector<StrategyTuple>>& strategies() const { return strategies_; }
  const std::vector<StrategyTuple>& strategies(std::size_t i) const { return strategies_.at(i); }
  const std::vector<std::size_t>& strategy_counts() const { return counts_; }
  const std::vector<Formula>& payoff_formulas() const { return formulas_; }
  const Formula& payoff_formula(std::size_t i) const { return formulas_.at(i); }

  std::optional<std::size_t> find_strategy(std::size_t i, const StrategyTuple& t) const {
    const auto& s = strategies_.at(i);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] == t) return k;
    }
    return std::nullopt;
  }

  // Values of V at a profile, in all_variables() order.
  std::vector<Rational> assignment(const Profile& p) const {
    profile_index(counts_, p);
    std::vector<Rational> out;
    out.reserve(all_vars_.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (const auto& x : strategies_[i][p[i]]) out.push_back(x.value());
    }
    return out;
  }

  TruthValue payoff(std::size_t player, const Profile& p) const {
    return TruthValue(compiled_.at(player).eval_unchecked(assignment(p)));
  }

  std::vector<TruthValue> payoffs(const Profile& p) const {
    auto a = assignment(p);
    std::vector<TruthValue> out;
    for (const auto& c : compiled_) out.emplace_back(c.eval_unchecked(a));
    return out;
  }

  // Payoffs at a profile given as tuples.
  std::vector<TruthValue> payoffs(const std::vector<StrategyTuple>& tuples) const {
    if (tuples.size() != players()) throw InputError("profile has the wrong number of players");
    Profile p;
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      auto k = find_strategy(i, tuples[i]);
      if (!k) {
        throw SemanticError("(" + tuple_str(tuples[i]) + ") is not a strategy of player " + std::to_string(i + 1));
      }
      p.push_back(*k);
    }
    return payoffs(p);
  }

  // Values occurring in some strategy, increasing.
  std::vector<TruthValue> relevant_elements() const {
    std::set<TruthValue> s;
    for (const auto& si : strategies_) {
      for (const auto& t : si) s.insert(t.begin(), t.end());
    }
    return {s.begin(), s.end()};
  }

  Classification classify() const {
    Classification c;
    c.basic = std::all_of(vars_.begin(), vars_.end(), [](const auto& v) { return v.size() == 1; });
    c.finite = true;
    if (alg_.is_finite()) {
      c.full = Tri::kYes;
      const std::size_t d = static_cast<std::size_t>(*alg_.chain()) + 1;
      for (std::size_t i = 0; i < players(); ++i) {
        std::size_t want = 1;
        for (std::size_t j = 0; j < vars_[i].size(); ++j) want *= d;
        if (counts_[i] != want) c.full = Tri::kNo;
      }
    } else {
      c.full = Tri::kUnknown;
    }
    const auto rel = relevant_elements();
    c.expressible = std::all_of(rel.begin(), rel.end(), [&](const TruthValue& a) { return alg_.has_constant(a); });
    c.weakly_expressible =
        std::all_of(rel.begin(), rel.end(), [&](const TruthValue& a) { return has_pseudo_char(alg_, a); });
    return c;
  }

  // Payoff table with strategies named by their tuples.
  StrategicGame to_strategic() const {
    std::vector<std::vector<std::string>> names;
    for (const auto& si : strategies_) {
      std::vector<std::string> ns;
      for (const auto& t : si) ns.push_back("(" + tuple_str(t) + ")");
      names.push_back(std::move(ns));
    }
    std::vector<std::vector<Rational>> pay;
    pay.reserve(profile_count(counts_));
    for (const auto& p : all_profiles(counts_)) {
      auto a = assignment(p);
      std::vector<Rational> row;
      for (const auto& c : compiled_) row.push_back(c.eval_unchecked(a));
      pay.push_back(std::move(row));
    }
    return StrategicGame(std::move(names), std::move(pay));
  }

  // No player gains by a unilateral deviation from p.
  bool pure_equilibria_check(const Profile& p) const {
    auto base = payoffs(p);
    Profile q = p;
    for (std::size_t i = 0; i < players(); ++i) {
      for (std::size_t s = 0; s < counts_[i]; ++s) {
        if (s == p[i]) continue;
        q[i] = s;
        if (payoff(i, q) > base[i]) return false;
      }
      q[i] = p[i];
    }
    return true;
  }

 private:
  Algebra alg_;
  std::vector<std::vector<std::string>> vars_;
  std::vector<std::vector<StrategyTuple>> strategies_;
  std::vector<Formula> formulas_;
  std::vector<std::string> all_vars_;
  std::vector<std::size_t> counts_;
  std::vector<CompiledFormula> compiled_;
};

// The same game read over a larger algebra. Requires the game's algebra to be
// a subreduct of `to`.
inline LogicalGame lift(const LogicalGame& lg, const Algebra& to) {
  if (!is_subreduct(lg.algebra(), to)) {
    throw SemanticError(lg.algebra().name() + " is not a subreduct of " + to.name());
  }
  return LogicalGame(to, lg.variables(), lg.strategies(), lg.payoff_formulas());
}

// One probability vector per player, indexed by strategy.
using MixedProfile = std::vector<std::vector<Rational>>;

inline void validate_mixed(const MixedProfile& mp, const std::vector<std::size_t>& counts) {
  if (mp.size() != counts.size()) {
    throw InputError("mixed profile has " + std::to_string(mp.size()) + " players, expected " +
                     std::to_string(counts.size()));
  }
  for (std::size_t i = 0; i < mp.size(); ++i) {
    if (mp[i].size() != counts[i]) {
      throw InputError("mixed strategy of player " + std::to_string(i + 1) + " has " + std::to_string(mp[i].size()) +
                       " entries, expected " + std::to_string(counts[i]));
    }
    Rational sum(0);
    for (const auto& p : mp[i]) {
      if (p.sign() < 0) throw SemanticError("negative probability " + p.str());
      sum += p;
    }
    if (sum != Rational(1)) {
      throw SemanticError("probabilities of player " + std::to_string(i + 1) + " sum to " + sum.str());
    }
  }
}

inline MixedProfile dirac(const std::vector<std::size_t>& counts, const Profile& p) {
  MixedProfile mp;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    std::vector<Rational> v(counts[i], Rational(0));
    v.at(p.at(i)) = Rational(1);
    mp.push_back(std::move(v));
  }
  return mp;
}

inline std::string mixed_str(const MixedProfile& mp) {
  std::string s;
  for (std::size_t i = 0; i < mp.size(); ++i) {
    if (i) s += " ; ";
    s += "(";
    for (std::size_t j = 0; j < mp[i].size(); ++j) {
      if (j) s += ",";
      s += mp[i][j].str();
    }
    s += ")";
  }
  return s;
}

}  // namespace lgames

#endif  // LGAMES_GAME_HPP_
