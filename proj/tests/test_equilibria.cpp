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

#include <gtest/gtest.h>

#include <algorithm>

#include "lgames/equilibria.hpp"
#include "support/oracles.hpp"

namespace {

using namespace lgames;

TEST(Gamma, NewTechnology) {
  auto lg = new_technology_logical();
  auto enc = build_gamma(lg);
  EXPECT_EQ(enc.conjuncts.size(), 6u);
  EXPECT_EQ(enc.conjuncts.front().first, "gamma_1_0");
  EXPECT_EQ(enc.conjuncts.back().first, "gamma_3_1");
  EXPECT_EQ(enc.aux_w, (std::vector<std::string>{"w__1"}));
  auto d = decide_pure_ne(lg);
  EXPECT_TRUE(d.sat);
  EXPECT_EQ(d.profiles, (std::vector<Profile>{{1, 1, 1}}));
  // Not full over L_4: membership is conjoined.
  EXPECT_FALSE(d.existence == enc.gamma);
}

TEST(Gamma, ConjunctShape) {
  auto lg = new_technology_logical();
  auto enc = build_gamma(lg);
  // phi_1(0, v2, v3) -> phi_1
  Formula want = f_imp(substitute(lg.payoff_formula(0), {{"v1", Formula::zero()}}), lg.payoff_formula(0));
  EXPECT_EQ(enc.conjuncts[0].second, want);
}

TEST(Gamma, MatchingPenniesUnsat) {
  auto rep = represent_binary_boolean(matching_pennies());
  auto d = decide_pure_ne(rep.target);
  EXPECT_FALSE(d.sat);
  EXPECT_TRUE(d.profiles.empty());
  EXPECT_EQ(d.existence, d.encoding.gamma);  // full game
}

TEST(Gamma, WeakRoute) {
  auto rep = represent_rational_lm(new_technology(1), 7);
  EXPECT_FALSE(rep.target.classify().expressible);
  EXPECT_THROW(build_gamma(rep.target), SemanticError);
  auto d = decide_pure_ne(rep.target, true);
  EXPECT_EQ(d.profiles, (std::vector<Profile>{{1, 1, 1}}));
  ASSERT_EQ(d.encoding.aux_q.size(), 2u);
  EXPECT_EQ(d.encoding.aux_q[0].first, "q__0");
  EXPECT_EQ(d.encoding.aux_q[0].second.str(), "1/7");
  EXPECT_EQ(d.encoding.conjuncts[0].first, "chi_q__0");
}

TEST(Gamma, WeakRouteMatchesStrongWhereBothApply) {
  auto lg = new_technology_logical();
  EXPECT_EQ(decide_pure_ne(lg, true).profiles, decide_pure_ne(lg, false).profiles);
}

TEST(Gamma, NotWeaklyExpressible) {
  LogicalGame lg(parse_algebra("STD_G"), {{"x"}}, {{{TruthValue(1, 3)}}}, {parse_formula("x")});
  EXPECT_THROW(build_gamma_weak(lg), SemanticError);
}

TEST(ProbDistr, SumsToOne) {
  Algebra a = parse_algebra("STD_L");
  std::vector<Formula> ps{Formula::var("a"), Formula::var("b"), Formula::var("c")};
  Formula d = build_prob_distr(ps);
  auto val = [&](Rational x, Rational y, Rational z) {
    return evaluate(d, a, {{"a", TruthValue(x)}, {"b", TruthValue(y)}, {"c", TruthValue(z)}}).value();
  };
  EXPECT_EQ(val(Rational(1, 2), Rational(1, 3), Rational(1, 6)), Rational(1));
  EXPECT_LT(val(Rational(1, 2), Rational(1, 3), Rational(1, 3)), Rational(1));
  EXPECT_LT(val(Rational(1, 2), Rational(1, 3), 0), Rational(1));
  Formula single = build_prob_distr({Formula::var("a")});
  EXPECT_EQ(evaluate(single, a, {{"a", TruthValue::one()}}).value(), Rational(1));
  EXPECT_LT(evaluate(single, a, {{"a", TruthValue(1, 2)}}).value(), Rational(1));
  EXPECT_THROW(build_prob_distr({}), SemanticError);
}

TEST(Mixed, MatchingPenniesUniform) {
  auto rep = represent_binary_boolean(matching_pennies());
  EXPECT_THROW(build_mixed_encoding(rep.target), SemanticError);
  auto lg = lift(rep.target, parse_algebra("STD_PL"));
  auto enc = build_mixed_encoding(lg);
  EXPECT_EQ(enc.variable_order, (std::vector<std::string>{"p_1__0", "p_1__1", "p_2__0", "p_2__1"}));
  MixedProfile u{{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};
  auto r = check_mixed_ne(lg, u, enc);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.trace.size(), 6u);
  EXPECT_EQ(encoded_expected_payoff(lg, enc, u, 0), Rational(1, 2));
  MixedProfile skew{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 2), Rational(1, 2)}};
  auto s = check_mixed_ne(lg, skew, enc);
  EXPECT_FALSE(s.holds);
  // Player 2 gains 1/6 by deviating to its better pure reply.
  EXPECT_EQ(s.value, Rational(5, 6));
}

TEST(Mixed, ProbabilityRankOrder) {
  // Strategies listed in non-increasing tuple order still get ranked names.
  LogicalGame lg(parse_algebra("STD_QPL_DELTA"), {{"x"}, {"y"}},
                 {{{TruthValue::one()}, {TruthValue::zero()}}, {{TruthValue(1, 2)}}},
                 {parse_formula("x"), parse_formula("y")});
  auto enc = build_mixed_encoding(lg);
  EXPECT_EQ(enc.prob_vars[0], (std::vector<std::string>{"p_1__1", "p_1__0"}));
  auto r = check_mixed_ne(lg, {{1, 0}, {1}}, enc);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(check_mixed_ne(lg, {{0, 1}, {1}}, enc).holds);
}

TEST(Mixed, Errors) {
  auto lg = lift(represent_binary_boolean(matching_pennies()).target, parse_algebra("STD_PL"));
  EXPECT_THROW(check_mixed_ne(lg, {{1, 0}}), InputError);
  EXPECT_THROW(check_mixed_ne(lg, {{1, 0, 0}, {1, 0}}), InputError);
  EXPECT_THROW(check_mixed_ne(lg, {{2, -1}, {1, 0}}), DomainError);
  // Not a distribution: the ProbDistr conjunct fails.
  EXPECT_FALSE(check_mixed_ne(lg, {{Rational(1, 2), 0}, {1, 0}}).holds);
  LogicalGame weak(parse_algebra("STD_PL"), {{"x"}}, {{{TruthValue(1, 2)}}}, {parse_formula("x")});
  EXPECT_THROW(build_mixed_encoding(weak), SemanticError);
}

TEST(Mixed, LoveAndHate) {
  auto lg = lift(love_and_hate_logical(2, 4), parse_algebra("STD_PL"));
  EXPECT_THROW(build_mixed_encoding(lg), SemanticError);  // 1/4 needs a constant
  auto lq = lift(love_and_hate_logical(2, 4), parse_algebra("STD_QPL_DELTA"));
  auto enc = build_mixed_encoding(lq);
  for (const auto& [t, r] : std::vector<std::pair<long, long>>{{0, 2}, {1, 3}, {2, 4}}) {
    auto mp = love_and_hate_profile(2, 4, {{t, r}});
    EXPECT_TRUE(check_mixed_ne(lq, mp, enc).holds) << t << "," << r;
  }
  EXPECT_FALSE(check_mixed_ne(lq, love_and_hate_profile(2, 4, {{0, 1}}), enc).holds);
}

}  // namespace
