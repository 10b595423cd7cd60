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

#include "lgames/oracle.hpp"
#include "support/oracles.hpp"

namespace {

using namespace lgames;

MixedProfile uniform2() { return {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}}; }

TEST(PureScan, Corpus) {
  EXPECT_EQ(pure_ne_scan(new_technology(1)), (std::vector<Profile>{{1, 1, 1}}));
  EXPECT_TRUE(pure_ne_scan(matching_pennies()).empty());
  EXPECT_TRUE(pure_ne_scan(matching_pennies_original()).empty());
  EXPECT_EQ(pure_ne_scan(new_technology_logical()), (std::vector<Profile>{{1, 1, 1}}));
}

TEST(PureScan, PrisonersDilemma) {
  StrategicGame pd({{"c", "d"}, {"c", "d"}}, {{3, 3}, {0, 5}, {5, 0}, {1, 1}});
  EXPECT_EQ(pure_ne_scan(pd), (std::vector<Profile>{{1, 1}}));
  auto eq = find_mixed_2p(pd);
  ASSERT_EQ(eq.size(), 1u);
  EXPECT_EQ(eq[0].profile, dirac({2, 2}, {1, 1}));
  EXPECT_EQ(eq[0].expected, (std::vector<Rational>{1, 1}));
}

TEST(VerifyMixed, MatchingPennies) {
  EXPECT_TRUE(verify_mixed(matching_pennies_original(), uniform2()));
  EXPECT_TRUE(verify_mixed(matching_pennies(), uniform2()));
  EXPECT_EQ(expected_payoff(matching_pennies_original(), uniform2(), 0), Rational(0));
  EXPECT_EQ(deviation_payoff(matching_pennies_original(), uniform2(), 0, 0), Rational(0));
  EXPECT_FALSE(verify_mixed(matching_pennies(), {{1, 0}, {Rational(1, 2), Rational(1, 2)}}));
  EXPECT_THROW(verify_mixed(matching_pennies(), {{1, 1}, {1, 0}}), SemanticError);
}

TEST(VerifyMixed, DiracOfPureEquilibria) {
  lgtest::Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    auto g = lgtest::random_rational_game(rng);
    for (const auto& p : pure_ne_scan(g)) EXPECT_TRUE(verify_mixed(g, dirac(g.strategy_counts(), p)));
  }
}

TEST(FindMixed, MatchingPenniesUnique) {
  auto eq = find_mixed_2p(matching_pennies_original());
  ASSERT_EQ(eq.size(), 1u);
  EXPECT_EQ(eq[0].profile, uniform2());
  EXPECT_FALSE(eq[0].degenerate);
  EXPECT_EQ(eq[0].expected, (std::vector<Rational>{0, 0}));
}

TEST(FindMixed, BattleOfTheSexes) {
  StrategicGame bos({{"o", "f"}, {"o", "f"}}, {{2, 1}, {0, 0}, {0, 0}, {1, 2}});
  auto eq = find_mixed_2p(bos);
  ASSERT_EQ(eq.size(), 3u);
  MixedProfile interior{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}};
  EXPECT_TRUE(std::any_of(eq.begin(), eq.end(), [&](const auto& e) { return e.profile == interior; }));
}

TEST(FindMixed, LoveAndHateFamily) {
  auto g = love_and_hate(2, 2);
  auto eq = find_mixed_2p(g);
  for (const auto& e : eq) EXPECT_TRUE(verify_mixed(g, e.profile));
  for (const auto& [t, r] : std::vector<std::pair<long, long>>{{0, 1}, {1, 2}}) {
    EXPECT_TRUE(verify_mixed(g, love_and_hate_profile(2, 2, {{t, r}})));
  }
}

TEST(FindMixed, RandomOutputsVerify) {
  lgtest::Rng rng(6);
  for (int k = 0; k < 80; ++k) {
    auto counts = std::vector<std::size_t>{static_cast<std::size_t>(lgtest::uniform(rng, 1, 4)),
                                           static_cast<std::size_t>(lgtest::uniform(rng, 1, 4))};
    std::vector<Rational> pool;
    for (int j = 0; j < 5; ++j) pool.push_back(lgtest::small_rational(rng));
    auto g = lgtest::random_game_from_pool(rng, counts, pool);
    auto eq = find_mixed_2p(g);
    for (const auto& e : eq) {
      EXPECT_TRUE(verify_mixed(g, e.profile));
      EXPECT_EQ(e.expected[0], expected_payoff(g, e.profile, 0));
    }
    // Every pure equilibrium shows up.
    for (const auto& p : pure_ne_scan(g)) {
      auto d = dirac(counts, p);
      EXPECT_TRUE(std::any_of(eq.begin(), eq.end(), [&](const auto& e) { return e.profile == d; }));
    }
  }
  EXPECT_THROW(find_mixed_2p(new_technology(1)), SemanticError);
}

TEST(FindMixed, DegenerateFlag) {
  StrategicGame flat({{"a", "b"}, {"x", "y"}}, {{1, 1}, {1, 1}, {1, 1}, {1, 1}});
  auto eq = find_mixed_2p(flat);
  EXPECT_FALSE(eq.empty());
  EXPECT_TRUE(std::any_of(eq.begin(), eq.end(), [](const auto& e) { return e.degenerate; }));
}

TEST(Linear, Solve) {
  // x + y = 3, x - y = 1
  auto s = detail::solve_linear({{1, 1, 3}, {1, -1, 1}}, 2);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->x, (std::vector<Rational>{2, 1}));
  EXPECT_FALSE(s->has_free);
  EXPECT_FALSE(detail::solve_linear({{1, 1, 3}, {2, 2, 1}}, 2).has_value());
  auto f = detail::solve_linear({{1, 1, 3}}, 2);
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(f->has_free);
}

TEST(Affine, Invariance) {
  EXPECT_TRUE(affine_invariance_check(matching_pennies_original(), {1, 1}, {0, 0}));
  EXPECT_TRUE(affine_invariance_check(matching_pennies_original(), {Rational(1, 2), Rational(1, 2)},
                                      {Rational(1, 2), Rational(1, 2)}));
  EXPECT_TRUE(affine_invariance_check(new_technology(1), {2, 3, 1}, {-1, 5, 0}));
  EXPECT_THROW(affine_invariance_check(matching_pennies(), {0, 1}, {0, 0}), SemanticError);
  EXPECT_THROW(affine_invariance_check(matching_pennies(), {1}, {0}), InputError);
  // The rescaled table is the original one under x -> x/2 + 1/2.
  auto h = matching_pennies_original().transform([](std::size_t, const Rational& x) {
    return x / Rational(2) + Rational(1, 2);
  });
  EXPECT_EQ(h, matching_pennies());
}

}  // namespace
