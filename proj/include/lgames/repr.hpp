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

// One-variable formula toolkit and compilers from strategic games to
// logical games.
//
// Toolkit:
//   pseudo_char     chi_a, valued 1 exactly at a
//   characteristic  delta_a, valued 1 at a and 0 elsewhere on the domain
//   mcnaughton_hat  xi_{m,n}, valued 1/n at m/n and below 1/n elsewhere
//   zeta            value b at a on a prime Lukasiewicz chain
//
// A Representation pairs the source game with the logical game, a strategy
// recoding c and an increasing payoff map g with f_i(s) = g(phi_i(c(s))).

#ifndef LGAMES_REPR_HPP_
#define LGAMES_REPR_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lgames/algebra.hpp"
#include "lgames/error.hpp"
#include "lgames/formula.hpp"
#include "lgames/game.hpp"
#include "lgames/rational.hpp"

namespace lgames {

// Farey neighbours a/b < m/n < c/d of m/n in (0,1), found on the
// Stern-Brocot path. They satisfy m*b - a*n = 1 and c*n - m*d = 1.
struct FareyParents {
  long a, b, c, d;
};

inline FareyParents farey_parents(long m, long n) {
  if (n < 2 || m < 1 || m >= n || gcd_long(m, n) != 1) {
    throw SemanticError("farey_parents needs 0 < m < n coprime, got " + std::to_string(m) + "/" + std::to_string(n));
  }
  FareyParents f{0, 1, 1, 1};
  for (;;) {
    long mm = f.a + f.c;
    long mn = f.b + f.d;
    if (mm == m && mn == n) return f;
    // compare m/n with mm/mn
    if (m * mn < mm * n) {
      f.c = mm;
      f.d = mn;
    } else {
      f.a = mm;
      f.b = mn;
    }
  }
}

// Builds and caches toolkit formulas over one algebra. Results for the same
// argument share DAG nodes.
class Toolkit {
 public:
  explicit Toolkit(Algebra alg) : alg_(std::move(alg)) {}

  const Algebra& algebra() const { return alg_; }

  // max(0, min(1, j*x - k)) for integers j >= 0 and k.
  Formula clamp_line(const Formula& x, long j, long k) {
    if (k < 0) return Formula::one();
    if (k >= j) return Formula::zero();
    auto key = std::make_tuple(x.node(), j, k);
    auto it = lines_.find(key);
    if (it != lines_.end()) return it->second;
    Formula keep = clamp_line(x, j - 1, k);
    Formula step = clamp_line(x, j - 1, k - 1);
    Formula r;
    if (keep.is_constant() && keep.value().is_zero()) {
      r = step.is_constant() && step.value().is_one() ? x : f_sconj(step, x);
    } else {
      r = f_oplus(keep, step.is_constant() && step.value().is_one() ? x : f_sconj(step, x));
    }
    lines_.emplace(key, r);
    pins_.push_back(x);
    return r;
  }

  // Schauder hat at m/n: clamp(bx - a) /\ ~clamp(dx - c + 1), where a/b and
  // c/d are the Farey neighbours of m/n.
  Formula hat(long m, long n, const Formula& x) {
    if (n < 1 || m < 1 || m > n || gcd_long(m, n) != 1) {
      throw SemanticError("hat needs 1 <= m <= n coprime, got " + std::to_string(m) + "/" + std::to_string(n));
    }
    if (!alg_.is_mv()) throw SemanticError("hat formulas need a Lukasiewicz algebra, got " + alg_.name());
    if (m == n) return x;
    auto key = std::make_tuple(x.node(), m, n);
    auto it = hats_.find(key);
    if (it != hats_.end()) return it->second;
    FareyParents f = farey_parents(m, n);
    Formula r = f_and(clamp_line(x, f.b, f.a), f_neg(clamp_line(x, f.d, f.c - 1)));
    hats_.emplace(key, r);
    pins_.push_back(x);
    return r;
  }

  bool has_pseudo_char(const Rational& a) const { return lgames::has_pseudo_char(alg_, a); }

  Formula pseudo_char(const Rational& a, const Formula& x) {
    if (!alg_.contains(a)) throw DomainError(a.str() + " is not in the domain of " + alg_.name());
    auto key = std::make_pair(x.node(), a);
    auto it = chi_.find(key);
    if (it != chi_.end()) return it->second;
    Formula r;
    if (alg_.has_constant(a)) {
      Formula c = Formula::constant(a);
      r = f_and(f_imp(x, c), f_imp(c, x));
    } else if (alg_.is_mv()) {
      long m = a.numerator().get_si();
      long n = a.denominator().get_si();
      r = power(Connective::kOplus, hat(m, n, x), static_cast<int>(n));
    } else {
      throw SemanticError("no pseudo-characteristic formula for " + a.str() + " in " + alg_.name());
    }
    chi_.emplace(key, r);
    pins_.push_back(x);
    return r;
  }

  bool has_characteristic(const Rational& a) const {
    if (!alg_.contains(a)) return false;
    if (alg_.has_delta()) return has_pseudo_char(a);
    if (alg_.family() == Algebra::Family::kBoolean) return true;
    if (alg_.is_mv() && alg_.is_finite()) return true;
    return alg_.family() == Algebra::Family::kGodel && a.sign() == 0;
  }

  Formula characteristic(const Rational& a, const Formula& x) {
    if (!has_characteristic(a)) {
      throw SemanticError("no characteristic formula for " + a.str() + " in " + alg_.name());
    }
    auto key = std::make_pair(x.node(), a);
    auto it = delta_.find(key);
    if (it != delta_.end()) return it->second;
    Formula r;
    if (alg_.has_delta()) {
      r = f_delta(pseudo_char(a, x));
    } else if (alg_.family() == Algebra::Family::kBoolean) {
      r = pseudo_char(a, x);
    } else if (alg_.is_mv()) {
      r = power(Connective::kStrongAnd, pseudo_char(a, x), *alg_.chain());
    } else {
      r = f_neg(x);
    }
    delta_.emplace(key, r);
    pins_.push_back(x);
    return r;
  }

  // Value q/m at p/m on the chain with m + 1 elements, m prime.
  Formula zeta(long m, const Rational& a, const Rational& b, const Formula& x) {
    if (!is_prime(m)) throw SemanticError("zeta needs a prime chain, got " + std::to_string(m));
    Rational am = a * Rational(m);
    Rational bm = b * Rational(m);
    if (!am.is_integer() || !bm.is_integer() || b < Rational(0) || b > Rational(1)) {
      throw SemanticError("zeta arguments must lie on the chain 1/" + std::to_string(m));
    }
    long p = am.numerator().get_si();
    long q = bm.numerator().get_si();
    if (p <= 0 || p >= m) throw SemanticError("zeta needs 0 < a < 1, got " + a.str());
    if (q == 0) return Formula::zero();
    return power(Connective::kOplus, hat(p, m, x), static_cast<int>(q));
  }

 private:
  using Key2 = std::pair<const void*, Rational>;
  Algebra alg_;
  std::map<std::tuple<const void*, long, long>, Formula> lines_;
  std::map<std::tuple<const void*, long, long>, Formula> hats_;
  std::map<Key2, Formula> chi_;
  std::map<Key2, Formula> delta_;
  std::vector<Formula> pins_;  // keeps cache keys alive
};

inline Formula mcnaughton_hat(long m, long n, const Formula& x = Formula::var("x")) {
  return Toolkit(catalog_lookup(AlgebraId::kStdL, std::nullopt)).hat(m, n, x);
}

inline Formula pseudo_char(const Algebra& alg, const Rational& a, const Formula& x = Formula::var("p")) {
  return Toolkit(alg).pseudo_char(a, x);
}

inline Formula characteristic(const Algebra& alg, const Rational& a, const Formula& x = Formula::var("p")) {
  return Toolkit(alg).characteristic(a, x);
}

inline Formula zeta(long m, const Rational& a, const Rational& b, const Formula& x = Formula::var("p")) {
  return Toolkit(catalog_lookup(AlgebraId::kL, static_cast<int>(m))).zeta(m, a, b, x);
}

// Strictly increasing payoff map, affine or given by a finite table.
class PayoffMap {
 public:
  enum class Kind : std::uint8_t { kAffine, kTable };

  static PayoffMap affine(Rational a, Rational b) {
    PayoffMap g;
    g.kind_ = Kind::kAffine;
    g.a_ = std::move(a);
    g.b_ = std::move(b);
    return g;
  }

  static PayoffMap table(std::vector<std::pair<Rational, Rational>> points) {
    PayoffMap g;
    g.kind_ = Kind::kTable;
    g.points_ = std::move(points);
    return g;
  }

  Kind kind() const { return kind_; }
  const Rational& slope() const { return a_; }
  const Rational& intercept() const { return b_; }
  const std::vector<std::pair<Rational, Rational>>& points() const { return points_; }

  bool strictly_increasing() const {
    if (kind_ == Kind::kAffine) return a_.sign() > 0;
    for (std::size_t k = 1; k < points_.size(); ++k) {
      if (!(points_[k - 1].first < points_[k].first) || !(points_[k - 1].second < points_[k].second)) return false;
    }
    return true;
  }

  // Affine with positive slope on the stored domain.
  bool is_affine() const {
    if (kind_ == Kind::kAffine) return a_.sign() > 0;
    if (!strictly_increasing()) return false;
    if (points_.size() <= 2) return true;
    const auto& [x0, y0] = points_.front();
    const auto& [x1, y1] = points_[1];
    Rational s = (y1 - y0) / (x1 - x0);
    for (std::size_t k = 2; k < points_.size(); ++k) {
      if ((points_[k].second - y0) != s * (points_[k].first - x0)) return false;
    }
    return true;
  }

  std::optional<Rational> operator()(const Rational& x) const {
    if (kind_ == Kind::kAffine) return a_ * x + b_;
    for (const auto& [px, py] : points_) {
      if (px == x) return py;
    }
    return std::nullopt;
  }

  std::optional<Rational> inverse(const Rational& y) const {
    if (kind_ == Kind::kAffine) return (y - b_) / a_;
    for (const auto& [px, py] : points_) {
      if (py == y) return px;
    }
    return std::nullopt;
  }

  std::string str() const {
    if (kind_ == Kind::kAffine) return "affine(" + a_.str() + ", " + b_.str() + ")";
    std::string s = "table(";
    for (std::size_t k = 0; k < points_.size(); ++k) {
      if (k) s += ", ";
      s += points_[k].first.str() + "->" + points_[k].second.str();
    }
    return s + ")";
  }

 private:
  Kind kind_ = Kind::kAffine;
  Rational a_{1};
  Rational b_{0};
  std::vector<std::pair<Rational, Rational>> points_;
};

struct Representation {
  StrategicGame source;
  LogicalGame target;
  // c[i][s]: the tuple recoding strategy s of player i.
  std::vector<std::vector<StrategyTuple>> c;
  PayoffMap g;
};

struct VerificationReport {
  bool pass = false;
  bool affine = false;
  std::string message;
  std::optional<Profile> counterexample;
  std::size_t player = 0;
};

// Target profile for a source profile, via c.
inline Profile map_profile(const Representation& rep, const Profile& s) {
  Profile t;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto k = rep.target.find_strategy(i, rep.c.at(i).at(s[i]));
    if (!k) throw SemanticError("c maps outside the target strategy set");
    t.push_back(*k);
  }
  return t;
}

// Exhaustive check of f_i(s) = g(phi_i(c(s))) plus the structural conditions
// on c and g.
inline VerificationReport verify_representation(const Representation& rep) {
  VerificationReport r;
  r.affine = rep.g.is_affine();
  const auto& src = rep.source;
  const auto& tgt = rep.target;
  if (src.players() != tgt.players() || rep.c.size() != src.players()) {
    r.message = "player counts differ";
    return r;
  }
  if (!rep.g.strictly_increasing()) {
    r.message = "g is not strictly increasing";
    return r;
  }
  for (std::size_t i = 0; i < src.players(); ++i) {
    if (rep.c[i].size() != src.strategy_count(i) || tgt.strategy_counts()[i] != src.strategy_count(i)) {
      r.message = "c for player " + std::to_string(i + 1) + " is not a bijection";
      return r;
    }
    std::set<std::size_t> image;
    for (const auto& t : rep.c[i]) {
      auto k = tgt.find_strategy(i, t);
      if (!k) {
        r.message = "c maps player " + std::to_string(i + 1) + " outside the target strategies: (" + tuple_str(t) + ")";
        return r;
      }
      image.insert(*k);
    }
    if (image.size() != src.strategy_count(i)) {
      r.message = "c for player " + std::to_string(i + 1) + " is not injective";
      return r;
    }
  }
  for (const auto& s : all_profiles(src.strategy_counts())) {
    auto vals = tgt.payoffs(map_profile(rep, s));
    for (std::size_t i = 0; i < src.players(); ++i) {
      auto gv = rep.g(vals[i].value());
      if (!gv || *gv != src.payoff(i, s)) {
        r.counterexample = s;
        r.player = i;
        r.message = "profile " + profile_str(s) + ", player " + std::to_string(i + 1) + ": expected " +
                    src.payoff(i, s).str() + ", got " + (gv ? gv->str() : "g undefined at " + vals[i].str());
        return r;
      }
    }
  }
  r.pass = true;
  r.message = "PASS";
  return r;
}

namespace detail {

inline std::size_t max_count(const StrategicGame& g) {
  const auto& c = g.strategy_counts();
  return *std::max_element(c.begin(), c.end());
}

// Digits of s in base `base`, most significant first, padded to `len`.
inline std::vector<std::size_t> digits(std::size_t s, std::size_t base, std::size_t len) {
  std::vector<std::size_t> out(len, 0);
  for (std::size_t j = len; j-- > 0;) {
    out[j] = s % base;
    s /= base;
  }
  return out;
}

// Smallest n with base^n >= count.
inline std::size_t ceil_log(std::size_t count, std::size_t base) {
  std::size_t n = 0;
  std::size_t reach = 1;
  while (reach < count) {
    reach *= base;
    ++n;
  }
  return n;
}

inline std::vector<std::vector<std::string>> variable_names(const std::vector<std::size_t>& per_player) {
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < per_player.size(); ++i) {
    std::vector<std::string> vs;
    if (per_player[i] == 1) {
      vs.push_back("v" + std::to_string(i + 1));
    } else {
      for (std::size_t j = 0; j < per_player[i]; ++j) {
        vs.push_back("v" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      }
    }
    out.push_back(std::move(vs));
  }
  return out;
}

inline void require_binary(const StrategicGame& g, Rational& lo, Rational& hi) {
  auto vals = g.payoff_values();
  if (vals.size() != 2) {
    throw SemanticError("payoff range has " + std::to_string(vals.size()) + " values; this method needs exactly 2");
  }
  lo = vals[0];
  hi = vals[1];
}

// Common denominator q and integer numerators of the payoff values.
inline std::pair<long, std::vector<long>> common_denominator(const std::vector<Rational>& vals) {
  mpz_class q = 1;
  for (const auto& v : vals) {
    mpz_class d = v.denominator();
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
  }
  if (!q.fits_slong_p()) throw SemanticError("payoff denominators too large");
  std::vector<long> p;
  for (const auto& v : vals) {
    Rational x = v * Rational(q.get_si());
    if (!x.numerator().fits_slong_p()) throw SemanticError("payoff numerators too large");
    p.push_back(x.numerator().get_si());
  }
  return {q.get_si(), p};
}

// Assembles phi_i = \/_s (value_i(s) /\ /\_k lit_k(s_k)) for each player.
// `value` returns nullopt to drop the value conjunct (0/1 payoff DNFs) and
// skip disjuncts whose value is false.
template <typename LiteralFn, typename ValueFn>
std::vector<Formula> profile_dnf(const StrategicGame& g, LiteralFn literal, ValueFn value) {
  const auto profiles = all_profiles(g.strategy_counts());
  std::vector<std::vector<Formula>> lits;  // lits[k][s]
  for (std::size_t k = 0; k < g.players(); ++k) {
    std::vector<Formula> per;
    for (std::size_t s = 0; s < g.strategy_count(k); ++s) per.push_back(literal(k, s));
    lits.push_back(std::move(per));
  }
  std::vector<Formula> out;
  for (std::size_t i = 0; i < g.players(); ++i) {
    std::vector<Formula> disj;
    for (const auto& s : profiles) {
      std::optional<Formula> v = value(i, s);
      if (!v) continue;
      std::vector<Formula> conj;
      if (!(v->is_constant() && v->value().is_one())) conj.push_back(*v);
      for (std::size_t k = 0; k < g.players(); ++k) {
        const Formula& l = lits[k][s[k]];
        if (!(l.is_constant() && l.value().is_one())) conj.push_back(l);
      }
      disj.push_back(big_and(conj));
    }
    out.push_back(big_or(disj));
  }
  return out;
}

}  // namespace detail

// Two payoff values a < b, Boolean variables, binary strategy codes.
inline Representation represent_binary_boolean(const StrategicGame& g) {
  Rational lo, hi;
  detail::require_binary(g, lo, hi);
  Algebra alg = catalog_lookup(AlgebraId::kBool2, std::nullopt);
  std::vector<std::size_t> nvars;
  for (std::size_t c : g.strategy_counts()) nvars.push_back(detail::ceil_log(c, 2));
  auto names = detail::variable_names(nvars);
  std::vector<std::vector<StrategyTuple>> c(g.players());
  for (std::size_t i = 0; i < g.players(); ++i) {
    for (std::size_t s = 0; s < g.strategy_count(i); ++s) {
      StrategyTuple t;
      for (std::size_t d : detail::digits(s, 2, nvars[i])) t.emplace_back(Rational(static_cast<long>(d)));
      c[i].push_back(std::move(t));
    }
  }
  auto literal = [&](std::size_t k, std::size_t s) {
    std::vector<Formula> parts;
    for (std::size_t j = 0; j < nvars[k]; ++j) {
      Formula v = Formula::var(names[k][j]);
      parts.push_back(c[k][s][j].is_one() ? v : f_neg(v));
    }
    return big_and(parts);
  };
  auto value = [&](std::size_t i, const Profile& s) -> std::optional<Formula> {
    if (g.payoff(i, s) == hi) return Formula::one();
    return std::nullopt;
  };
  auto phi = detail::profile_dnf(g, literal, value);
  LogicalGame lg(alg, names, c, phi);
  return Representation{g, std::move(lg), std::move(c), PayoffMap::affine(hi - lo, lo)};
}

// (m+1)-ary codes over `alg` with anchors x_0..x_m (default k/m).
inline Representation represent_binary_general(const StrategicGame& g, long m, const Algebra& alg,
                                               std::vector<Rational> anchors = {}) {
  Rational lo, hi;
  detail::require_binary(g, lo, hi);
  if (m < 1) throw SemanticError("m must be >= 1");
  if (anchors.empty()) {
    for (long k = 0; k <= m; ++k) anchors.emplace_back(k, m);
  }
  if (static_cast<long>(anchors.size()) != m + 1) {
    throw SemanticError("need " + std::to_string(m + 1) + " anchors, got " + std::to_string(anchors.size()));
  }
  if (std::set<Rational>(anchors.begin(), anchors.end()).size() != anchors.size()) {
    throw SemanticError("anchors must be distinct");
  }
  Toolkit tk(alg);
  for (const auto& x : anchors) {
    if (!tk.has_characteristic(x)) {
      throw SemanticError("insufficient characterizable elements: no characteristic formula for " + x.str() +
                          " in " + alg.name());
    }
  }
  const auto base = static_cast<std::size_t>(m + 1);
  std::vector<std::size_t> nvars;
  for (std::size_t c : g.strategy_counts()) nvars.push_back(detail::ceil_log(c, base));
  auto names = detail::variable_names(nvars);
  std::vector<std::vector<StrategyTuple>> c(g.players());
  std::vector<std::vector<std::vector<std::size_t>>> codes(g.players());
  for (std::size_t i = 0; i < g.players(); ++i) {
    for (std::size_t s = 0; s < g.strategy_count(i); ++s) {
      auto ds = detail::digits(s, base, nvars[i]);
      StrategyTuple t;
      for (std::size_t d : ds) t.emplace_back(anchors[d]);
      c[i].push_back(std::move(t));
      codes[i].push_back(std::move(ds));
    }
  }
  // One node per variable so the toolkit cache is shared across literals.
  std::map<std::string, Formula> var_nodes;
  for (const auto& vs : names) {
    for (const auto& v : vs) var_nodes.emplace(v, Formula::var(v));
  }
  auto literal_shared = [&](std::size_t k, std::size_t s) {
    std::vector<Formula> parts;
    for (std::size_t j = 0; j < nvars[k]; ++j) {
      parts.push_back(tk.characteristic(anchors[codes[k][s][j]], var_nodes.at(names[k][j])));
    }
    return big_and(parts);
  };
  auto value = [&](std::size_t i, const Profile& s) -> std::optional<Formula> {
    if (g.payoff(i, s) == hi) return Formula::one();
    return std::nullopt;
  };
  auto phi = detail::profile_dnf(g, literal_shared, value);
  LogicalGame lg(alg, names, c, phi);
  return Representation{g, std::move(lg), std::move(c), PayoffMap::affine(hi - lo, lo)};
}

// Basic game over the chain with m = max|S_i| - 1.
inline Representation represent_binary_chain(const StrategicGame& g) {
  long m = static_cast<long>(detail::max_count(g)) - 1;
  if (m < 1) throw SemanticError("every player has a single strategy; the chain would be trivial");
  return represent_binary_general(g, m, catalog_lookup(AlgebraId::kL, static_cast<int>(m)));
}

namespace detail {

// Basic representation with strategy s of player k coded as anchors[s] and
// phi_i = \/_s (value(i, s) /\ /\_k delta_{anchors[s_k]}(v_k)).
inline Representation basic_dnf(const StrategicGame& g, const Algebra& alg, const std::vector<Rational>& anchors,
                                 const std::function<Formula(Toolkit&, std::size_t, const Profile&,
                                                             const std::vector<Formula>&)>& value,
                                 PayoffMap pm) {
  Toolkit tk(alg);
  std::vector<std::size_t> ones(g.players(), 1);
  auto names = variable_names(ones);
  std::vector<Formula> vars;
  for (const auto& vs : names) vars.push_back(Formula::var(vs[0]));
  std::vector<std::vector<StrategyTuple>> c(g.players());
  for (std::size_t i = 0; i < g.players(); ++i) {
    for (std::size_t s = 0; s < g.strategy_count(i); ++s) c[i].push_back({TruthValue(anchors.at(s))});
  }
  auto literal = [&](std::size_t k, std::size_t s) { return tk.characteristic(anchors[s], vars[k]); };
  auto val = [&](std::size_t i, const Profile& s) -> std::optional<Formula> { return value(tk, i, s, vars); };
  auto phi = profile_dnf(g, literal, val);
  LogicalGame lg(alg, names, c, phi);
  return Representation{g, std::move(lg), std::move(c), std::move(pm)};
}

inline void require_spread(const std::vector<Rational>& vals) {
  if (vals.size() < 2) {
    throw SemanticError("all payoffs are equal; g would not be strictly increasing (use the constant representation)");
  }
}

}  // namespace detail

// Basic expressible game over the rational Goedel algebra with Delta.
inline Representation represent_rational_qg_delta(const StrategicGame& g) {
  auto vals = g.payoff_values();
  detail::require_spread(vals);
  long m = static_cast<long>(detail::max_count(g)) - 1;
  if (m < 1) throw SemanticError("needs some player with at least 2 strategies");
  const Rational o1 = vals.front();
  const Rational span = vals.back() - o1;
  std::vector<Rational> anchors;
  for (long k = 0; k <= m; ++k) anchors.emplace_back(k, m);
  auto value = [&](Toolkit&, std::size_t i, const Profile& s, const std::vector<Formula>&) {
    return Formula::constant((g.payoff(i, s) - o1) / span);
  };
  return detail::basic_dnf(g, catalog_lookup(AlgebraId::kStdQGDelta, std::nullopt), anchors, value,
                           PayoffMap::affine(span, o1));
}

// Smallest chain length accepted by represent_rational_gmc_delta.
inline long gmc_bound(const StrategicGame& g) {
  auto vals = g.payoff_values();
  auto [q, p] = detail::common_denominator(vals);
  (void)q;
  long spread = p.back() - p.front();
  return std::max({spread, static_cast<long>(detail::max_count(g)) - 1, 1L});
}

// Basic expressible game over G_m with constants and Delta, g(x) = (mx + p_1)/q.
inline Representation represent_rational_gmc_delta(const StrategicGame& g, std::optional<long> m_opt = std::nullopt) {
  auto vals = g.payoff_values();
  detail::require_spread(vals);
  auto [q, p] = detail::common_denominator(vals);
  const long bound = gmc_bound(g);
  const long m = m_opt.value_or(bound);
  if (m < bound) {
    throw SemanticError("m = " + std::to_string(m) + " is below the bound " + std::to_string(bound));
  }
  const long p1 = p.front();
  std::vector<Rational> anchors;
  for (long k = 0; k < static_cast<long>(detail::max_count(g)); ++k) anchors.emplace_back(k, m);
  auto value = [&, q = q](Toolkit&, std::size_t i, const Profile& s, const std::vector<Formula>&) {
    return Formula::constant((g.payoff(i, s) * Rational(q) - Rational(p1)) / Rational(m));
  };
  return detail::basic_dnf(g, catalog_lookup(AlgebraId::kGCDelta, static_cast<int>(m)), anchors, value,
                           PayoffMap::affine(Rational(m, q), Rational(p1, q)));
}

// Smallest prime accepted by represent_rational_lm.
inline long lm_bound(const StrategicGame& g) {
  auto vals = g.payoff_values();
  auto [q, p] = detail::common_denominator(vals);
  (void)q;
  long need = std::max(p.back() - p.front(), static_cast<long>(detail::max_count(g)) + 1);
  long m = std::max(need, 2L);
  while (!is_prime(m)) ++m;
  return m;
}

// Basic weakly expressible game over the prime chain L_m, c_i(s) = (s+1)/m.
inline Representation represent_rational_lm(const StrategicGame& g, std::optional<long> m_opt = std::nullopt) {
  auto vals = g.payoff_values();
  detail::require_spread(vals);
  auto [q, p] = detail::common_denominator(vals);
  const long m = m_opt.value_or(lm_bound(g));
  if (!is_prime(m)) throw SemanticError("m = " + std::to_string(m) + " is not prime");
  const long need = std::max(p.back() - p.front(), static_cast<long>(detail::max_count(g)) + 1);
  if (m < need) throw SemanticError("m = " + std::to_string(m) + " is below the bound " + std::to_string(need));
  const long p1 = p.front();
  std::vector<Rational> anchors;
  for (long k = 0; k < static_cast<long>(detail::max_count(g)); ++k) anchors.emplace_back(k + 1, m);
  auto value = [&, q = q](Toolkit& tk, std::size_t i, const Profile& s, const std::vector<Formula>& vars) {
    Rational b = (g.payoff(i, s) * Rational(q) - Rational(p1)) / Rational(m);
    return tk.zeta(m, anchors[s[i]], b, vars[i]);
  };
  return detail::basic_dnf(g, catalog_lookup(AlgebraId::kL, static_cast<int>(m)), anchors, value,
                           PayoffMap::affine(Rational(m, q), Rational(p1, q)));
}

// Basic game over `alg` with strategy anchors a_0.. and payoff anchors
// b_1 < b_2 < ...; g is the table b_j -> o_j.
inline Representation represent_general(const StrategicGame& g, const Algebra& alg, const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) {
  auto vals = g.payoff_values();
  if (a.size() < detail::max_count(g)) {
    throw SemanticError("need at least " + std::to_string(detail::max_count(g)) + " strategy anchors, got " +
                        std::to_string(a.size()));
  }
  if (b.size() < vals.size()) {
    throw SemanticError("need at least " + std::to_string(vals.size()) + " payoff anchors, got " +
                        std::to_string(b.size()));
  }
  if (std::set<Rational>(a.begin(), a.end()).size() != a.size()) throw SemanticError("strategy anchors must be distinct");
  for (std::size_t j = 1; j < b.size(); ++j) {
    if (!(b[j - 1] < b[j])) throw SemanticError("payoff anchors must be strictly increasing");
  }
  Toolkit probe(alg);
  for (std::size_t k = 0; k < detail::max_count(g); ++k) {
    if (!probe.has_characteristic(a[k])) {
      throw SemanticError("no characteristic formula for " + a[k].str() + " in " + alg.name());
    }
  }
  std::vector<std::pair<Rational, Rational>> table;
  std::map<Rational, Rational> to_b;
  for (std::size_t j = 0; j < vals.size(); ++j) {
    if (!alg.has_constant(b[j])) throw SemanticError("no truth constant for " + b[j].str() + " in " + alg.name());
    table.emplace_back(b[j], vals[j]);
    to_b.emplace(vals[j], b[j]);
  }
  auto value = [&](Toolkit&, std::size_t i, const Profile& s, const std::vector<Formula>&) {
    return Formula::constant(to_b.at(g.payoff(i, s)));
  };
  return detail::basic_dnf(g, alg, a, value, PayoffMap::table(std::move(table)));
}

// Constant games: every phi_i is 1 and g(x) = x + o - 1.
inline Representation represent_constant(const StrategicGame& g) {
  auto vals = g.payoff_values();
  if (vals.size() != 1) throw SemanticError("payoffs are not constant");
  Algebra alg = catalog_lookup(AlgebraId::kBool2, std::nullopt);
  std::vector<std::size_t> nvars;
  for (std::size_t c : g.strategy_counts()) nvars.push_back(detail::ceil_log(c, 2));
  auto names = detail::variable_names(nvars);
  std::vector<std::vector<StrategyTuple>> c(g.players());
  for (std::size_t i = 0; i < g.players(); ++i) {
    for (std::size_t s = 0; s < g.strategy_count(i); ++s) {
      StrategyTuple t;
      for (std::size_t d : detail::digits(s, 2, nvars[i])) t.emplace_back(Rational(static_cast<long>(d)));
      c[i].push_back(std::move(t));
    }
  }
  std::vector<Formula> phi(g.players(), Formula::one());
  LogicalGame lg(alg, names, c, phi);
  return Representation{g, std::move(lg), std::move(c), PayoffMap::affine(Rational(1), vals[0] - Rational(1))};
}

}  // namespace lgames

#endif  // LGAMES_REPR_HPP_
