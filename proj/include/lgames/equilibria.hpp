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

// Propositional encodings of Nash equilibria of logical games.
//
// Pure equilibria. For player i and strategy s of i,
//   gamma_{i,s} = phi_i[V_i := s] -> phi_i
// and gamma is the meet of all of them: a profile satisfies gamma iff it is
// an equilibrium. With truth constants, s is written with constants. Without
// them (weak route) every relevant element a gets a fresh variable q__k,
// pinned to a by a pseudo-characteristic conjunct chi_a(q__k).
//
// Mixed equilibria. Player i gets one variable p_i__k per strategy, k the
// lexicographic rank of the strategy tuple. ProbDistr_i holds exactly on
// probability vectors, E_i is the expected payoff written with sums and
// products, and the encoding is
//   /\_i (ProbDistr_i /\ /\_a (E_i(a, p_{-i}) -> E_i(p))).
//
// Auxiliary names always contain "__", which game variables may not.

#ifndef LGAMES_EQUILIBRIA_HPP_
#define LGAMES_EQUILIBRIA_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lgames/algebra.hpp"
#include "lgames/error.hpp"
#include "lgames/formula.hpp"
#include "lgames/game.hpp"
#include "lgames/rational.hpp"
#include "lgames/repr.hpp"

namespace lgames {

struct PureNEEncoding {
  enum class Variant : std::uint8_t { kExpressible, kWeaklyExpressible };

  Variant variant = Variant::kExpressible;
  Formula gamma;
  // Named pieces of gamma, in the order they are conjoined.
  std::vector<std::pair<std::string, Formula>> conjuncts;
  std::vector<std::string> aux_w;
  // q variable and the relevant element it stands for (weak route only).
  std::vector<std::pair<std::string, TruthValue>> aux_q;
};

namespace detail {

inline std::vector<std::string> w_names(const LogicalGame& lg) {
  std::size_t w = 0;
  for (const auto& v : lg.variables()) w = std::max(w, v.size());
  std::vector<std::string> out;
  for (std::size_t j = 1; j <= w; ++j) out.push_back("w__" + std::to_string(j));
  return out;
}

// phi_i(..., w^1..w^|V_i|, ...) -> phi_i, with the w's then replaced through
// `value_of`.
template <typename ValueOf>
std::vector<std::pair<std::string, Formula>> gamma_conjuncts(const LogicalGame& lg,
                                                             const std::vector<std::string>& w,
                                                             ValueOf value_of) {
  std::vector<std::pair<std::string, Formula>> out;
  for (std::size_t i = 0; i < lg.players(); ++i) {
    const auto& vi = lg.variables(i);
    Substitution to_w;
    for (std::size_t j = 0; j < vi.size(); ++j) to_w.emplace(vi[j], Formula::var(w[j]));
    const Formula& phi = lg.payoff_formula(i);
    Formula dev = substitute(phi, to_w);
    for (std::size_t s = 0; s < lg.strategy_counts()[i]; ++s) {
      Substitution from_w;
      const auto& t = lg.strategies(i)[s];
      for (std::size_t j = 0; j < vi.size(); ++j) from_w.emplace(w[j], value_of(t[j]));
      out.emplace_back("gamma_" + std::to_string(i + 1) + "_" + std::to_string(s), f_imp(substitute(dev, from_w), phi));
    }
  }
  return out;
}

inline Formula meet(const std::vector<std::pair<std::string, Formula>>& named) {
  std::vector<Formula> fs;
  for (const auto& [id, f] : named) fs.push_back(f);
  return big_and(fs);
}

}  // namespace detail

// gamma over V, with strategies written as truth constants.
inline PureNEEncoding build_gamma(const LogicalGame& lg) {
  if (!lg.classify().expressible) {
    throw SemanticError("game is not expressible over " + lg.algebra().name() + "; use the weak route");
  }
  PureNEEncoding enc;
  enc.variant = PureNEEncoding::Variant::kExpressible;
  enc.aux_w = detail::w_names(lg);
  enc.conjuncts = detail::gamma_conjuncts(lg, enc.aux_w, [](const TruthValue& a) { return Formula::constant(a); });
  enc.gamma = detail::meet(enc.conjuncts);
  return enc;
}

// gamma' over V and the q variables.
inline PureNEEncoding build_gamma_weak(const LogicalGame& lg) {
  if (!lg.classify().weakly_expressible) {
    throw SemanticError("game is not weakly expressible over " + lg.algebra().name());
  }
  PureNEEncoding enc;
  enc.variant = PureNEEncoding::Variant::kWeaklyExpressible;
  enc.aux_w = detail::w_names(lg);
  Toolkit tk(lg.algebra());
  std::map<TruthValue, Formula> q_of;
  std::vector<std::pair<std::string, Formula>> chi_block;
  const auto rel = lg.relevant_elements();
  for (std::size_t k = 0; k < rel.size(); ++k) {
    std::string name = "q__" + std::to_string(k);
    Formula q = Formula::var(name);
    enc.aux_q.emplace_back(name, rel[k]);
    q_of.emplace(rel[k], q);
    chi_block.emplace_back("chi_" + name, tk.pseudo_char(rel[k], q));
  }
  enc.conjuncts = chi_block;
  auto body = detail::gamma_conjuncts(lg, enc.aux_w, [&](const TruthValue& a) { return q_of.at(a); });
  enc.conjuncts.insert(enc.conjuncts.end(), body.begin(), body.end());
  enc.gamma = f_and(detail::meet(chi_block), detail::meet(body));
  return enc;
}

// Disjunction over profiles of the pseudo-characteristic formulas pinning V
// to that profile.
inline Formula membership_formula(const LogicalGame& lg) {
  Toolkit tk(lg.algebra());
  std::map<std::string, Formula> vars;
  for (const auto& v : lg.all_variables()) vars.emplace(v, Formula::var(v));
  std::vector<Formula> disj;
  for (const auto& p : all_profiles(lg.strategy_counts())) {
    std::vector<Formula> conj;
    for (std::size_t i = 0; i < lg.players(); ++i) {
      const auto& t = lg.strategies(i)[p[i]];
      for (std::size_t j = 0; j < t.size(); ++j) conj.push_back(tk.pseudo_char(t[j], vars.at(lg.variables(i)[j])));
    }
    disj.push_back(big_and(conj));
  }
  return big_or(disj);
}

// Satisfiable iff the game has a pure equilibrium. For full games gamma alone.
inline Formula build_existence(const LogicalGame& lg, const PureNEEncoding& enc) {
  if (lg.classify().full == Tri::kYes) return enc.gamma;
  return f_and(membership_formula(lg), enc.gamma);
}

struct PureNEDecision {
  std::vector<Profile> profiles;
  bool sat = false;
  PureNEEncoding encoding;
  Formula existence;
};

// Evaluates the existence formula at every profile (q's pinned to their
// elements) and keeps the profiles where it is 1.
inline PureNEDecision decide_pure_ne(const LogicalGame& lg, bool weak = false) {
  PureNEDecision d;
  d.encoding = weak ? build_gamma_weak(lg) : build_gamma(lg);
  d.existence = build_existence(lg, d.encoding);
  std::vector<std::string> order = lg.all_variables();
  std::vector<Rational> q_values;
  for (const auto& [name, a] : d.encoding.aux_q) {
    order.push_back(name);
    q_values.push_back(a.value());
  }
  CompiledFormula cf(d.existence, lg.algebra(), order);
  for (const auto& p : all_profiles(lg.strategy_counts())) {
    auto vals = lg.assignment(p);
    vals.insert(vals.end(), q_values.begin(), q_values.end());
    if (cf.eval_unchecked(vals) == Rational(1)) d.profiles.push_back(p);
  }
  d.sat = !d.profiles.empty();
  return d;
}

// Holds exactly when the values of `ps` sum to 1. A single variable is
// pinned to 1.
inline Formula build_prob_distr(const std::vector<Formula>& ps) {
  if (ps.empty()) throw SemanticError("no probability variables");
  if (ps.size() == 1) return f_and(f_imp(ps[0], Formula::one()), f_imp(Formula::one(), ps[0]));
  std::vector<Formula> parts{big_oplus(ps)};
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::vector<Formula> rest;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (j != i) rest.push_back(ps[j]);
    }
    parts.push_back(f_imp(big_oplus(rest), f_neg(ps[i])));
  }
  return big_and(parts);
}

struct MixedNEEncoding {
  // prob_vars[i][s]: variable for strategy s (list position) of player i.
  std::vector<std::vector<std::string>> prob_vars;
  std::vector<Formula> prob_distr;
  std::vector<Formula> expected;
  std::vector<std::vector<Formula>> expected_dev;
  Formula full;
  std::vector<std::pair<std::string, Formula>> conjuncts;
  // All probability variables, player by player in lexicographic order.
  std::vector<std::string> variable_order;
};

inline bool supports_mixed(const Algebra& alg) { return alg.expands_pl(); }

inline MixedNEEncoding build_mixed_encoding(const LogicalGame& lg) {
  if (!supports_mixed(lg.algebra())) {
    throw SemanticError(lg.algebra().name() + " lacks the product connective; lift the game first");
  }
  if (!lg.classify().expressible) throw SemanticError("mixed encoding needs an expressible game");
  MixedNEEncoding enc;
  const std::size_t n = lg.players();
  std::vector<std::vector<Formula>> p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& si = lg.strategies(i);
    std::vector<std::size_t> order(si.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return si[a] < si[b]; });
    std::vector<std::string> names(si.size());
    for (std::size_t rank = 0; rank < order.size(); ++rank) {
      names[order[rank]] = "p_" + std::to_string(i + 1) + "__" + std::to_string(rank);
    }
    for (std::size_t rank = 0; rank < order.size(); ++rank) enc.variable_order.push_back(names[order[rank]]);
    for (const auto& nm : names) p[i].push_back(Formula::var(nm));
    enc.prob_vars.push_back(std::move(names));
  }
  // phi_i at each profile, with V replaced by constants.
  const auto profiles = all_profiles(lg.strategy_counts());
  std::vector<std::vector<Formula>> at(n);
  for (const auto& s : profiles) {
    Substitution sub;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& t = lg.strategies(k)[s[k]];
      for (std::size_t j = 0; j < t.size(); ++j) sub.emplace(lg.variables(k)[j], Formula::constant(t[j]));
    }
    for (std::size_t i = 0; i < n; ++i) at[i].push_back(substitute(lg.payoff_formula(i), sub));
  }
  for (std::size_t i = 0; i < n; ++i) {
    enc.prob_distr.push_back(build_prob_distr(p[i]));
    std::vector<Formula> terms;
    std::vector<std::vector<Formula>> dev_terms(lg.strategy_counts()[i]);
    for (std::size_t k = 0; k < profiles.size(); ++k) {
      const auto& s = profiles[k];
      std::vector<Formula> w;
      std::vector<Formula> w_dev;
      for (std::size_t j = 0; j < n; ++j) {
        w.push_back(p[j][s[j]]);
        if (j != i) w_dev.push_back(p[j][s[j]]);
      }
      terms.push_back(f_odot(at[i][k], big_odot(w)));
      dev_terms[s[i]].push_back(f_odot(at[i][k], big_odot(w_dev)));
    }
    enc.expected.push_back(big_oplus(terms));
    std::vector<Formula> devs;
    for (auto& dt : dev_terms) devs.push_back(big_oplus(dt));
    enc.expected_dev.push_back(std::move(devs));
  }
  for (std::size_t i = 0; i < n; ++i) {
    enc.conjuncts.emplace_back("probdistr_" + std::to_string(i + 1), enc.prob_distr[i]);
    for (std::size_t a = 0; a < enc.expected_dev[i].size(); ++a) {
      enc.conjuncts.emplace_back("dev_" + std::to_string(i + 1) + "_" + std::to_string(a),
                                 f_imp(enc.expected_dev[i][a], enc.expected[i]));
    }
  }
  enc.full = detail::meet(enc.conjuncts);
  return enc;
}

struct MixedCheck {
  bool holds = false;
  Rational value;
  std::vector<std::pair<std::string, Rational>> trace;
};

inline std::vector<Rational> mixed_assignment(const MixedNEEncoding& enc, const MixedProfile& mp) {
  std::map<std::string, Rational> val;
  for (std::size_t i = 0; i < enc.prob_vars.size(); ++i) {
    for (std::size_t s = 0; s < enc.prob_vars[i].size(); ++s) val.emplace(enc.prob_vars[i][s], mp[i][s]);
  }
  std::vector<Rational> out;
  for (const auto& v : enc.variable_order) out.push_back(val.at(v));
  return out;
}

// Evaluates the mixed encoding at `mp` (indexed by strategy list position).
inline MixedCheck check_mixed_ne(const LogicalGame& lg, const MixedProfile& mp, const MixedNEEncoding& enc) {
  const auto& counts = lg.strategy_counts();
  if (mp.size() != counts.size()) throw InputError("mixed profile has the wrong number of players");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (mp[i].size() != counts[i]) {
      throw InputError("mixed strategy of player " + std::to_string(i + 1) + " has the wrong length");
    }
    for (const auto& x : mp[i]) {
      if (x < Rational(0) || x > Rational(1)) throw DomainError("probability " + x.str() + " outside [0,1]");
    }
  }
  auto vals = mixed_assignment(enc, mp);
  MixedCheck r;
  r.value = Rational(1);
  for (const auto& [id, f] : enc.conjuncts) {
    Rational v = CompiledFormula(f, lg.algebra(), enc.variable_order).eval_unchecked(vals);
    r.trace.emplace_back(id, v);
    r.value = min(r.value, v);
  }
  r.holds = r.value == Rational(1);
  return r;
}

inline MixedCheck check_mixed_ne(const LogicalGame& lg, const MixedProfile& mp) {
  return check_mixed_ne(lg, mp, build_mixed_encoding(lg));
}

// Value of E_i(p) at a mixed profile.
inline Rational encoded_expected_payoff(const LogicalGame& lg, const MixedNEEncoding& enc, const MixedProfile& mp,
                                        std::size_t i) {
  return CompiledFormula(enc.expected.at(i), lg.algebra(), enc.variable_order)
      .eval_unchecked(mixed_assignment(enc, mp));
}

}  // namespace lgames

#endif  // LGAMES_EQUILIBRIA_HPP_
