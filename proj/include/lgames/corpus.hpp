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

// Named example games with hand-written logical counterparts.
//
//   new_technology(c)         3 firms, stay (0) or adopt (1)
//   matching_pennies()        payoffs rescaled to {0, 1}
//   love_and_hate(n, m)       n even, strategies k/m, m even
//   vickrey(p, t, grid)       second-price auction on a finite bid grid

#ifndef LGAMES_CORPUS_HPP_
#define LGAMES_CORPUS_HPP_

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "lgames/algebra.hpp"
#include "lgames/error.hpp"
#include "lgames/formula.hpp"
#include "lgames/game.hpp"
#include "lgames/rational.hpp"
#include "lgames/repr.hpp"

namespace lgames {

inline StrategicGame new_technology(const Rational& c) {
  if (c.sign() <= 0) throw SemanticError("the competitive advantage c must be positive");
  const Rational half = c / Rational(2);
  return StrategicGame(
      {{"stay", "adopt"}, {"stay", "adopt"}, {"stay", "adopt"}}, [&] {
        std::vector<std::vector<Rational>> pay;
        for (const auto& p : all_profiles({2, 2, 2})) {
          std::size_t k = p[0] + p[1] + p[2];
          std::vector<Rational> row(3, Rational(0));
          for (std::size_t i = 0; i < 3; ++i) {
            bool adopts = p[i] == 1;
            if (k == 1) row[i] = adopts ? c : -half;
            if (k == 2) row[i] = adopts ? half : -c;
          }
          pay.push_back(std::move(row));
        }
        return pay;
      }());
}

inline std::string new_technology_formula(int i) {
  std::string own = "v" + std::to_string(i);
  std::vector<std::string> others;
  for (int j = 1; j <= 3; ++j) {
    if (j != i) others.push_back("v" + std::to_string(j));
  }
  return "(c(1/2) + (c(1/2) /\\ " + own + ")) - ((c(1/4) /\\ " + others[0] + ") + (c(1/4) /\\ " + others[1] + "))";
}

// Basic logical game over L_4 with constants; v_i = 1 means adopt.
inline LogicalGame new_technology_logical() {
  std::vector<std::vector<StrategyTuple>> s(3, {{TruthValue::zero()}, {TruthValue::one()}});
  std::vector<Formula> phi;
  for (int i = 1; i <= 3; ++i) phi.push_back(parse_formula(new_technology_formula(i)));
  return LogicalGame(catalog_lookup(AlgebraId::kLC, 4), {{"v1"}, {"v2"}, {"v3"}}, s, phi);
}

// g(x) = 2c(x - 1/2).
inline Representation new_technology_representation(const Rational& c) {
  auto lg = new_technology_logical();
  auto cmap = lg.strategies();
  return Representation{new_technology(c), std::move(lg), std::move(cmap),
                        PayoffMap::affine(Rational(2) * c, -c)};
}

inline StrategicGame matching_pennies() {
  return StrategicGame({{"h", "t"}, {"h", "t"}}, {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
}

// Original +1/-1 payoffs.
inline StrategicGame matching_pennies_original() {
  return StrategicGame({{"h", "t"}, {"h", "t"}}, {{1, -1}, {-1, 1}, {-1, 1}, {1, -1}});
}

namespace detail {

inline void check_love_and_hate(long n, long m) {
  if (n < 2 || n % 2 != 0) throw SemanticError("love_and_hate needs an even number of players, got " + std::to_string(n));
  if (m < 2 || m % 2 != 0) throw SemanticError("love_and_hate needs an even m, got " + std::to_string(m));
}

inline Rational lh_h(const Rational& x, const Rational& y) {
  Rational d = x < y ? y - x : x - y;
  return Rational(2) * min(d, Rational(1) - d);
}

}  // namespace detail

// Odd players (1-based 2j-1) get h(s_{2j-1}, s_{2j}); even players 2j get
// 1 - h(s_{2j}, s_{2j+1}), with s_{n+1} read as s_1.
inline StrategicGame love_and_hate(long n, long m) {
  detail::check_love_and_hate(n, m);
  std::vector<std::string> names;
  for (long k = 0; k <= m; ++k) names.push_back(Rational(k, m).str());
  std::vector<std::size_t> counts(static_cast<std::size_t>(n), static_cast<std::size_t>(m + 1));
  std::vector<std::vector<Rational>> pay;
  for (const auto& p : all_profiles(counts)) {
    std::vector<Rational> row;
    for (long i = 0; i < n; ++i) {
      Rational si(static_cast<long>(p[i]), m);
      Rational next(static_cast<long>(p[(i + 1) % n]), m);
      row.push_back(i % 2 == 0 ? detail::lh_h(si, next) : Rational(1) - detail::lh_h(si, next));
    }
    pay.push_back(std::move(row));
  }
  return StrategicGame(std::vector<std::vector<std::string>>(static_cast<std::size_t>(n), names), std::move(pay));
}

// eta(x, y) = (theta /\ ~theta) + (theta /\ ~theta), theta = ~(x -> y) \/ ~(y -> x).
inline Formula love_and_hate_eta(const Formula& x, const Formula& y) {
  Formula theta = f_or(f_neg(f_imp(x, y)), f_neg(f_imp(y, x)));
  Formula half = f_and(theta, f_neg(theta));
  return f_oplus(half, half);
}

// Full basic game over L_m.
inline LogicalGame love_and_hate_logical(long n, long m) {
  detail::check_love_and_hate(n, m);
  Algebra alg = catalog_lookup(AlgebraId::kL, static_cast<int>(m));
  std::vector<std::vector<std::string>> vars;
  std::vector<Formula> v;
  for (long i = 1; i <= n; ++i) {
    vars.push_back({"v" + std::to_string(i)});
    v.push_back(Formula::var("v" + std::to_string(i)));
  }
  std::vector<StrategyTuple> chain;
  for (const auto& x : alg.elements()) chain.push_back({x});
  std::vector<Formula> phi;
  for (long i = 0; i < n; ++i) {
    Formula eta = love_and_hate_eta(v[i], v[(i + 1) % n]);
    phi.push_back(i % 2 == 0 ? eta : f_neg(eta));
  }
  return LogicalGame(alg, vars, std::vector<std::vector<StrategyTuple>>(static_cast<std::size_t>(n), chain), phi);
}

inline Representation love_and_hate_representation(long n, long m) {
  auto lg = love_and_hate_logical(n, m);
  auto cmap = lg.strategies();
  return Representation{love_and_hate(n, m), std::move(lg), std::move(cmap), PayoffMap::affine(1, 0)};
}

// Players 2j-1 and 2j both mix 1/2-1/2 over t_j and r_j (indices k for k/m).
inline MixedProfile love_and_hate_profile(long n, long m, const std::vector<std::pair<long, long>>& pairs) {
  detail::check_love_and_hate(n, m);
  if (static_cast<long>(pairs.size()) != n / 2) throw InputError("need one (t, r) pair per couple of players");
  MixedProfile mp;
  for (const auto& [t, r] : pairs) {
    if (t < 0 || t > m || r < 0 || r > m || t == r) throw SemanticError("bad support pair");
    std::vector<Rational> v(static_cast<std::size_t>(m + 1), Rational(0));
    v[t] = Rational(1, 2);
    v[r] = Rational(1, 2);
    mp.push_back(v);
    mp.push_back(v);
  }
  return mp;
}

namespace detail {

inline void check_vickrey(const std::vector<Rational>& p, const Rational& t, const std::vector<Rational>& grid) {
  if (p.size() < 2) throw SemanticError("vickrey needs at least 2 bidders");
  for (const auto& x : p) {
    if (x.sign() < 0) throw SemanticError("values must be non-negative");
    if (!(x < t)) throw SemanticError("values must lie below the maximal bid t");
  }
  if (grid.empty()) throw SemanticError("empty bid grid");
  if (std::set<Rational>(grid.begin(), grid.end()).size() != grid.size()) throw SemanticError("duplicate bids in grid");
  for (const auto& b : grid) {
    if (b.sign() < 0 || b > t) throw SemanticError("bid " + b.str() + " outside [0, t]");
  }
}

}  // namespace detail

// Bids 0, t/k, ..., t.
inline std::vector<Rational> vickrey_grid(const Rational& t, long k) {
  if (k < 1) throw SemanticError("grid needs at least one step");
  std::vector<Rational> g;
  for (long j = 0; j <= k; ++j) g.push_back(t * Rational(j, k));
  return g;
}

// The lowest-indexed highest bidder wins and pays the highest other bid.
inline StrategicGame vickrey(const std::vector<Rational>& p, const Rational& t, const std::vector<Rational>& grid) {
  detail::check_vickrey(p, t, grid);
  const std::size_t n = p.size();
  std::vector<std::string> names;
  for (const auto& b : grid) names.push_back(b.str());
  std::vector<std::vector<Rational>> pay;
  for (const auto& prof : all_profiles(std::vector<std::size_t>(n, grid.size()))) {
    std::vector<Rational> b;
    for (std::size_t i = 0; i < n; ++i) b.push_back(grid[prof[i]]);
    Rational top = *std::max_element(b.begin(), b.end());
    std::size_t winner = 0;
    while (b[winner] != top) ++winner;
    std::vector<Rational> row(n, Rational(0));
    Rational second(0);
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == winner) continue;
      if (!any || b[j] > second) second = b[j];
      any = true;
    }
    row[winner] = p[winner] - second;
    pay.push_back(std::move(row));
  }
  return StrategicGame(std::vector<std::vector<std::string>>(n, names), std::move(pay));
}

// c(x) = (t + x) / (2t).
inline Rational vickrey_code(const Rational& t, const Rational& bid) { return (t + bid) / (Rational(2) * t); }

// Payoff formulas over the rational Lukasiewicz algebra with Delta.
inline std::vector<Formula> vickrey_formulas(const std::vector<Rational>& p, const Rational& t) {
  const std::size_t n = p.size();
  std::vector<Formula> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(Formula::var("v" + std::to_string(i + 1)));
  Formula all = big_or(v);
  std::vector<Formula> phi;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Formula> others;
    std::vector<Formula> before;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) others.push_back(v[j]);
      if (j < i) before.push_back(v[j]);
    }
    Formula kappa = big_or(others);
    Formula iota = f_and(f_delta(f_imp(all, v[i])), f_neg(f_delta(f_imp(v[i], big_or(before)))));
    Formula r = Formula::constant(vickrey_code(t, p[i]));
    Formula gain = f_oplus(Formula::constant(Rational(1, 2)), f_and(iota, f_ominus(r, kappa)));
    phi.push_back(f_ominus(gain, f_and(iota, f_ominus(kappa, r))));
  }
  return phi;
}

inline LogicalGame vickrey_logical(const std::vector<Rational>& p, const Rational& t, const std::vector<Rational>& grid) {
  detail::check_vickrey(p, t, grid);
  const std::size_t n = p.size();
  std::vector<std::vector<std::string>> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back({"v" + std::to_string(i + 1)});
  std::vector<StrategyTuple> s;
  for (const auto& b : grid) s.push_back({TruthValue(vickrey_code(t, b))});
  return LogicalGame(catalog_lookup(AlgebraId::kStdQLDelta, std::nullopt), vars,
                     std::vector<std::vector<StrategyTuple>>(n, s), vickrey_formulas(p, t));
}

// g(x) = 2t(x - 1/2).
inline Representation vickrey_representation(const std::vector<Rational>& p, const Rational& t,
                                             const std::vector<Rational>& grid) {
  auto lg = vickrey_logical(p, t, grid);
  auto cmap = lg.strategies();
  return Representation{vickrey(p, t, grid), std::move(lg), std::move(cmap),
                        PayoffMap::affine(Rational(2) * t, -t)};
}

}  // namespace lgames

#endif  // LGAMES_CORPUS_HPP_
