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

// Brute-force equilibrium computations on payoff tables. Nothing here looks
// at formulas; this is the ground truth the encodings are checked against.

#ifndef LGAMES_ORACLE_HPP_
#define LGAMES_ORACLE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lgames/error.hpp"
#include "lgames/game.hpp"
#include "lgames/rational.hpp"

namespace lgames {

// All profiles where no player has a profitable unilateral deviation, in
// lexicographic order.
inline std::vector<Profile> pure_ne_scan(const StrategicGame& g) {
  const auto& counts = g.strategy_counts();
  std::vector<Profile> out;
  for (std::size_t k = 0; k < g.profile_count(); ++k) {
    Profile p = profile_at(counts, k);
    const auto& base = g.payoff_table()[k];
    bool ok = true;
    Profile q = p;
    for (std::size_t i = 0; i < counts.size() && ok; ++i) {
      for (std::size_t s = 0; s < counts[i] && ok; ++s) {
        q[i] = s;
        if (g.payoff(i, q) > base[i]) ok = false;
      }
      q[i] = p[i];
    }
    if (ok) out.push_back(std::move(p));
  }
  return out;
}

inline std::vector<Profile> pure_ne_scan(const LogicalGame& lg) { return pure_ne_scan(lg.to_strategic()); }

// Expected payoff of `player` under a mixed profile.
inline Rational expected_payoff(const StrategicGame& g, const MixedProfile& mp, std::size_t player) {
  const auto& counts = g.strategy_counts();
  Rational total(0);
  for (std::size_t k = 0; k < g.profile_count(); ++k) {
    Profile p = profile_at(counts, k);
    Rational w(1);
    for (std::size_t j = 0; j < counts.size() && w.sign() != 0; ++j) w *= mp[j][p[j]];
    if (w.sign() == 0) continue;
    total += w * g.payoff_table()[k][player];
  }
  return total;
}

// Expected payoff of `player` when it plays pure strategy `s` against mp.
inline Rational deviation_payoff(const StrategicGame& g, const MixedProfile& mp, std::size_t player,
                                 std::size_t s) {
  MixedProfile dev = mp;
  dev[player].assign(g.strategy_count(player), Rational(0));
  dev[player][s] = Rational(1);
  return expected_payoff(g, dev, player);
}

// Exact mixed-equilibrium test: no pure deviation beats the profile.
inline bool verify_mixed(const StrategicGame& g, const MixedProfile& mp) {
  validate_mixed(mp, g.strategy_counts());
  for (std::size_t i = 0; i < g.players(); ++i) {
    Rational e = expected_payoff(g, mp, i);
    for (std::size_t s = 0; s < g.strategy_count(i); ++s) {
      if (deviation_payoff(g, mp, i, s) > e) return false;
    }
  }
  return true;
}

namespace detail {

struct LinearSolution {
  std::vector<Rational> x;
  bool has_free = false;
};

// Gauss-Jordan elimination on an augmented matrix [A | b]. Free variables
// are set to zero. Returns nullopt when inconsistent.
inline std::optional<LinearSolution> solve_linear(std::vector<std::vector<Rational>> m, std::size_t unknowns) {
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t k = r; k < rows; ++k) {
      if (m[k][c].sign() != 0) {
        piv = k;
        break;
      }
    }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || m[k][c].sign() == 0) continue;
      Rational f = m[k][c];
      for (std::size_t j = c; j <= unknowns; ++j) m[k][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < rows; ++k) {
    if (m[k][unknowns].sign() != 0) return std::nullopt;
  }
  LinearSolution sol;
  sol.x.assign(unknowns, Rational(0));
  sol.has_free = pivot_col.size() < unknowns;
  for (std::size_t k = 0; k < pivot_col.size(); ++k) sol.x[pivot_col[k]] = m[k][unknowns];
  return sol;
}

// Distribution over `opp` strategies supported on `opp_support` that makes
// `player` indifferent across `own_support`.
inline std::optional<std::pair<std::vector<Rational>, bool>> indifference(const StrategicGame& g, std::size_t player,
                                                                          const std::vector<std::size_t>& own_support,
                                                                          const std::vector<std::size_t>& opp_support) {
  const std::size_t opp = 1 - player;
  const std::size_t unknowns = opp_support.size() + 1;  // probabilities, then the value
  std::vector<std::vector<Rational>> m;
  for (std::size_t s : own_support) {
    std::vector<Rational> row(unknowns + 1, Rational(0));
    for (std::size_t j = 0; j < opp_support.size(); ++j) {
      Profile p(2);
      p[player] = s;
      p[opp] = opp_support[j];
      row[j] = g.payoff(player, p);
    }
    row[unknowns - 1] = Rational(-1);
    m.push_back(std::move(row));
  }
  std::vector<Rational> sum(unknowns + 1, Rational(0));
  for (std::size_t j = 0; j < opp_support.size(); ++j) sum[j] = Rational(1);
  sum[unknowns] = Rational(1);
  m.push_back(std::move(sum));
  auto sol = solve_linear(std::move(m), unknowns);
  if (!sol) return std::nullopt;
  std::vector<Rational> dist(g.strategy_count(opp), Rational(0));
  for (std::size_t j = 0; j < opp_support.size(); ++j) {
    if (sol->x[j].sign() < 0) return std::nullopt;
    dist[opp_support[j]] = sol->x[j];
  }
  return std::make_pair(std::move(dist), sol->has_free);
}

inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::size_t{1} << k)) s.push_back(k);
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace detail

struct MixedEquilibrium {
  MixedProfile profile;
  std::vector<Rational> expected;
  // The indifference system had free variables; the profile is one
  // representative of a larger solution set.
  bool degenerate = false;
};

// Support enumeration for two-player games. Returns verified equilibria,
// deduplicated and sorted by profile.
inline std::vector<MixedEquilibrium> find_mixed_2p(const StrategicGame& g) {
  if (g.players() != 2) throw SemanticError("mixed equilibrium search needs exactly 2 players");
  const auto sup1 = detail::nonempty_subsets(g.strategy_count(0));
  const auto sup2 = detail::nonempty_subsets(g.strategy_count(1));
  std::vector<MixedEquilibrium> found;
  for (const auto& i_sup : sup1) {
    for (const auto& j_sup : sup2) {
      auto y = detail::indifference(g, 0, i_sup, j_sup);  // player 2's mix
      if (!y) continue;
      auto x = detail::indifference(g, 1, j_sup, i_sup);  // player 1's mix
      if (!x) continue;
      MixedProfile mp{x->first, y->first};
      if (!verify_mixed(g, mp)) continue;
      bool degenerate = x->second || y->second;
      auto it = std::find_if(found.begin(), found.end(), [&](const auto& e) { return e.profile == mp; });
      if (it != found.end()) {
        it->degenerate = it->degenerate || degenerate;
        continue;
      }
      MixedEquilibrium e;
      e.profile = mp;
      e.expected = {expected_payoff(g, mp, 0), expected_payoff(g, mp, 1)};
      e.degenerate = degenerate;
      found.push_back(std::move(e));
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.profile < b.profile; });
  return found;
}

// Checks that the payoff change f_i -> a_i f_i + b_i (a_i > 0) leaves the pure
// equilibria unchanged and, for two players, that mixed equilibria found in
// either game are equilibria of the other. Without degeneracy the
// support-enumeration outputs must coincide.
inline bool affine_invariance_check(const StrategicGame& g, const std::vector<Rational>& a,
                                    const std::vector<Rational>& b) {
  if (a.size() != g.players() || b.size() != g.players()) {
    throw InputError("need one (a_i, b_i) pair per player");
  }
  for (const auto& ai : a) {
    if (ai.sign() <= 0) throw SemanticError("affine factor must be positive, got " + ai.str());
  }
  StrategicGame h = g.transform([&](std::size_t i, const Rational& x) { return a[i] * x + b[i]; });
  if (pure_ne_scan(g) != pure_ne_scan(h)) return false;
  if (g.players() != 2) return true;
  auto mg = find_mixed_2p(g);
  auto mh = find_mixed_2p(h);
  for (const auto& e : mg) {
    if (!verify_mixed(h, e.profile)) return false;
  }
  for (const auto& e : mh) {
    if (!verify_mixed(g, e.profile)) return false;
  }
  // Degenerate representatives depend on pivoting, so only compare exact
  // outputs when both searches were nondegenerate.
  auto degenerate = [](const auto& v) { return std::any_of(v.begin(), v.end(), [](const auto& e) { return e.degenerate; }); };
  if (degenerate(mg) || degenerate(mh)) return true;
  if (mg.size() != mh.size()) return false;
  for (std::size_t k = 0; k < mg.size(); ++k) {
    if (mg[k].profile != mh[k].profile) return false;
  }
  return true;
}

}  // namespace lgames

#endif  // LGAMES_ORACLE_HPP_
