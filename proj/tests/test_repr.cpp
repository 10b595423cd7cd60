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

#include "lgames/repr.hpp"
#include "support/oracles.hpp"

namespace {

using namespace lgames;
using lgtest::Q;

Q value_at(const Formula& f, const Algebra& alg, const Rational& x, const char* var = "p") {
  return lgtest::ref_eval(f, lgtest::sem_of(alg), {{var, x.get()}});
}

TEST(Farey, Parents) {
  auto f = farey_parents(2, 5);
  EXPECT_EQ(std::make_tuple(f.a, f.b, f.c, f.d), std::make_tuple(1L, 3L, 1L, 2L));
  auto g = farey_parents(3, 8);
  EXPECT_EQ(std::make_tuple(g.a, g.b, g.c, g.d), std::make_tuple(1L, 3L, 2L, 5L));
  auto h = farey_parents(1, 7);
  EXPECT_EQ(std::make_tuple(h.a, h.b, h.c, h.d), std::make_tuple(0L, 1L, 1L, 6L));
  EXPECT_THROW(farey_parents(2, 4), SemanticError);
  EXPECT_THROW(farey_parents(1, 1), SemanticError);
  for (long n = 2; n <= 12; ++n) {
    for (long m = 1; m < n; ++m) {
      if (gcd_long(m, n) != 1) continue;
      auto p = farey_parents(m, n);
      EXPECT_EQ(m * p.b - p.a * n, 1) << m << "/" << n;
      EXPECT_EQ(p.c * n - m * p.d, 1) << m << "/" << n;
    }
  }
}

TEST(Toolkit, ClampLineIsExact) {
  Toolkit tk(parse_algebra("STD_L"));
  Formula x = Formula::var("x");
  for (long j = 1; j <= 6; ++j) {
    for (long k = -1; k <= j; ++k) {
      Formula f = tk.clamp_line(x, j, k);
      lgtest::PLModel model("x");
      lgtest::PL pl = model(f);
      for (long t = 0; t <= 24; ++t) {
        Q xv = lgtest::q(t, 24);
        Q want = lgtest::qmax(Q(0), lgtest::qmin(Q(1), Q(j * xv - k)));
        EXPECT_EQ(pl.at(xv), want) << j << " " << k;
      }
    }
  }
}

TEST(Toolkit, HatValues) {
  Formula h = mcnaughton_hat(2, 5);
  lgtest::PLModel model("x", {lgtest::q(2, 5)});
  auto pl = model(h);
  EXPECT_EQ(pl.at(lgtest::q(2, 5)), lgtest::q(1, 5));
  EXPECT_EQ(pl.at(lgtest::q(1, 3)), 0);
  EXPECT_EQ(pl.at(lgtest::q(1, 2)), 0);
  EXPECT_EQ(pl.max_value(), lgtest::q(1, 5));
  EXPECT_EQ(mcnaughton_hat(1, 1), Formula::var("x"));
  EXPECT_THROW(mcnaughton_hat(2, 4), SemanticError);
  EXPECT_THROW(Toolkit(parse_algebra("STD_G")).hat(1, 2, Formula::var("x")), SemanticError);
}

TEST(Toolkit, PseudoCharacteristicOnChains) {
  for (long n : {2L, 3L, 5L, 6L}) {
    Algebra a = catalog_lookup(AlgebraId::kL, static_cast<int>(n));
    for (const auto& t : a.elements()) {
      Formula f = pseudo_char(a, t);
      for (const auto& x : a.elements()) {
        Q v = value_at(f, a, x);
        if (x == t) {
          EXPECT_EQ(v, 1);
        } else {
          EXPECT_LT(v, 1);
        }
      }
    }
  }
  // With constants: (p -> a) /\ (a -> p).
  EXPECT_EQ(print(pseudo_char(parse_algebra("STD_QG"), Rational(1, 3))), "((p -> c(1/3)) /\\ (c(1/3) -> p))");
  EXPECT_THROW(pseudo_char(parse_algebra("STD_G"), Rational(1, 3)), SemanticError);
  EXPECT_THROW(pseudo_char(parse_algebra("L_3"), Rational(1, 2)), DomainError);
}

TEST(Toolkit, CharacteristicRoutes) {
  EXPECT_TRUE(Toolkit(parse_algebra("G_4")).has_characteristic(0));
  EXPECT_FALSE(Toolkit(parse_algebra("G_4")).has_characteristic(Rational(1, 4)));
  EXPECT_TRUE(Toolkit(parse_algebra("G_4_C_DELTA")).has_characteristic(Rational(1, 4)));
  EXPECT_FALSE(Toolkit(parse_algebra("STD_L")).has_characteristic(Rational(1, 4)));
  EXPECT_TRUE(Toolkit(parse_algebra("STD_L_DELTA")).has_characteristic(Rational(1, 4)));
  EXPECT_TRUE(Toolkit(parse_algebra("BOOL2")).has_characteristic(1));
  EXPECT_THROW(characteristic(parse_algebra("STD_QG"), Rational(1, 2)), SemanticError);
  EXPECT_EQ(print(characteristic(parse_algebra("G_3"), 0)), "~p");
}

TEST(Toolkit, CharacteristicOnSampledInfiniteCarrier) {
  Algebra a = parse_algebra("STD_L_DELTA");
  for (const auto& t : {Rational(1, 3), Rational(2, 7), Rational(1)}) {
    Formula f = characteristic(a, t);
    for (long k = 0; k <= 42; ++k) {
      Rational x(k, 42);
      EXPECT_EQ(value_at(f, a, x), x == t ? 1 : 0) << t << " at " << x;
    }
  }
}

TEST(Toolkit, Zeta) {
  Algebra l5 = parse_algebra("L_5");
  Formula z = zeta(5, Rational(2, 5), Rational(3, 5));
  EXPECT_EQ(value_at(z, l5, Rational(2, 5)), lgtest::q(3, 5));
  EXPECT_EQ(zeta(5, Rational(2, 5), 0), Formula::zero());
  EXPECT_THROW(zeta(4, Rational(2, 4), Rational(1, 4)), SemanticError);
  EXPECT_THROW(zeta(5, 0, Rational(1, 5)), SemanticError);
  EXPECT_THROW(zeta(5, Rational(1, 3), Rational(1, 5)), SemanticError);
}

TEST(PayoffMap, Basics) {
  auto g = PayoffMap::affine(2, -1);
  EXPECT_EQ(*g(Rational(1, 2)), Rational(0));
  EXPECT_EQ(*g.inverse(1), Rational(1));
  EXPECT_TRUE(g.is_affine());
  EXPECT_FALSE(PayoffMap::affine(0, 1).strictly_increasing());
  auto t = PayoffMap::table({{0, 1}, {Rational(1, 2), 2}, {1, 4}});
  EXPECT_TRUE(t.strictly_increasing());
  EXPECT_FALSE(t.is_affine());
  EXPECT_FALSE(t(Rational(1, 4)).has_value());
  EXPECT_EQ(*t.inverse(2), Rational(1, 2));
  EXPECT_TRUE(PayoffMap::table({{0, 1}, {Rational(1, 2), 2}, {1, 3}}).is_affine());
  EXPECT_FALSE(PayoffMap::table({{0, 1}, {1, 1}}).strictly_increasing());
  EXPECT_EQ(t.str(), "table(0->1, 1/2->2, 1->4)");
}

TEST(Represent, MatchingPenniesBoolean) {
  auto rep = represent_binary_boolean(matching_pennies());
  EXPECT_TRUE(verify_representation(rep).pass);
  EXPECT_EQ(rep.target.algebra().name(), "BOOL2");
  EXPECT_EQ(print(rep.target.payoff_formula(0)), "((~v1 /\\ ~v2) \\/ (v1 /\\ v2))");
  EXPECT_EQ(print(rep.target.payoff_formula(1)), "((~v1 /\\ v2) \\/ (v1 /\\ ~v2))");
  EXPECT_EQ(rep.g.str(), "affine(1, 0)");
}

TEST(Represent, BooleanEncodesWiderStrategySets) {
  StrategicGame g({{"a", "b", "c"}, {"x", "y"}}, {{1, 2}, {2, 1}, {2, 2}, {1, 1}, {2, 1}, {1, 2}});
  auto rep = represent_binary_boolean(g);
  EXPECT_TRUE(verify_representation(rep).pass);
  EXPECT_EQ(rep.target.variables(0), (std::vector<std::string>{"v1_1", "v1_2"}));
  EXPECT_EQ(rep.target.variables(1), (std::vector<std::string>{"v2"}));
  EXPECT_EQ(rep.g.str(), "affine(1, 1)");
}

TEST(Represent, BinaryChainAndGeneral) {
  StrategicGame g({{"a", "b", "c"}, {"x", "y"}}, {{0, 3}, {3, 0}, {3, 3}, {0, 0}, {3, 0}, {0, 3}});
  auto chain = represent_binary_chain(g);
  EXPECT_EQ(chain.target.algebra().name(), "L_2");
  EXPECT_TRUE(verify_representation(chain).pass);
  auto gen = represent_binary_general(g, 3, parse_algebra("G_3_C_DELTA"), {0, Rational(1, 3), Rational(2, 3), 1});
  EXPECT_TRUE(verify_representation(gen).pass);
  EXPECT_THROW(represent_binary_general(g, 3, parse_algebra("G_3")), SemanticError);
  EXPECT_THROW(represent_binary_general(g, 2, parse_algebra("L_2"), {0, 1}), SemanticError);
  StrategicGame three({{"a", "b"}}, {{0}, {1}});
  EXPECT_NO_THROW(represent_binary_boolean(three));
  StrategicGame wide({{"a", "b", "c"}}, {{0}, {1}, {2}});
  EXPECT_THROW(represent_binary_boolean(wide), SemanticError);
}

TEST(Represent, NewTechnologyRoutes) {
  auto nt = new_technology(1);
  auto vi = represent_rational_qg_delta(nt);
  EXPECT_TRUE(verify_representation(vi).pass);
  EXPECT_EQ(vi.g.str(), "affine(2, -1)");

  EXPECT_EQ(gmc_bound(nt), 4);
  auto gmc = represent_rational_gmc_delta(nt);
  EXPECT_EQ(gmc.target.algebra().name(), "G_4_C_DELTA");
  EXPECT_TRUE(verify_representation(gmc).pass);
  EXPECT_EQ(gmc.g.str(), "affine(2, -1)");
  EXPECT_THROW(represent_rational_gmc_delta(nt, 3), SemanticError);
  EXPECT_TRUE(verify_representation(represent_rational_gmc_delta(nt, 6)).pass);

  EXPECT_EQ(lm_bound(nt), 5);
  for (long m : {5L, 7L, 11L, 13L}) {
    auto lm = represent_rational_lm(nt, m);
    EXPECT_EQ(lm.target.algebra().name(), "L_" + std::to_string(m));
    auto report = verify_representation(lm);
    EXPECT_TRUE(report.pass) << m << " " << report.message;
    EXPECT_EQ(lm.c[0][1][0].value(), Rational(2, m));
  }
  EXPECT_THROW(represent_rational_lm(nt, 9), SemanticError);
  EXPECT_THROW(represent_rational_lm(nt, 3), SemanticError);
}

TEST(Represent, GeneralTable) {
  auto nt = new_technology(2);
  std::vector<Rational> b{Rational(1, 10), Rational(2, 10), Rational(3, 10), Rational(9, 10), 1};
  auto rep = represent_general(nt, parse_algebra("STD_QL_DELTA"), {Rational(1, 3), Rational(2, 3)}, b);
  EXPECT_TRUE(verify_representation(rep).pass);
  EXPECT_FALSE(rep.g.is_affine());
  EXPECT_THROW(represent_general(nt, parse_algebra("STD_QL_DELTA"), {0}, b), SemanticError);
  EXPECT_THROW(represent_general(nt, parse_algebra("STD_QL_DELTA"), {0, 1}, {0, 1}), SemanticError);
  EXPECT_THROW(represent_general(nt, parse_algebra("STD_QL_DELTA"), {0, 0}, b), SemanticError);
  EXPECT_THROW(represent_general(nt, parse_algebra("STD_L"), {0, Rational(1, 2)}, b), SemanticError);
  auto g4 = represent_general(nt, parse_algebra("G_4_C_DELTA"), {0, 1},
                              {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1});
  EXPECT_TRUE(verify_representation(g4).pass);
  EXPECT_TRUE(g4.g.is_affine());
}

TEST(Represent, ConstantGame) {
  StrategicGame g({{"a", "b", "c"}, {"x"}}, std::vector<std::vector<Rational>>(3, {Rational(5, 2), Rational(5, 2)}));
  auto rep = represent_constant(g);
  EXPECT_TRUE(verify_representation(rep).pass);
  EXPECT_EQ(rep.g.str(), "affine(1, 3/2)");
  EXPECT_THROW(represent_rational_qg_delta(g), SemanticError);
  EXPECT_THROW(represent_constant(matching_pennies()), SemanticError);
}

TEST(Verify, ReportsCounterexample) {
  auto rep = represent_binary_boolean(matching_pennies());
  rep.g = PayoffMap::affine(2, 0);
  auto r = verify_representation(rep);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample.has_value());
  rep.g = PayoffMap::affine(-1, 1);
  EXPECT_EQ(verify_representation(rep).message, "g is not strictly increasing");
  auto bad = represent_binary_boolean(matching_pennies());
  bad.c[0][1] = bad.c[0][0];
  EXPECT_FALSE(verify_representation(bad).pass);
}

}  // namespace
