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

#include "lgames/corpus.hpp"
#include "support/oracles.hpp"

namespace {

using namespace lgames;

TEST(NewTechnology, PayoffTables) {
  // Rows written out cell by cell, index 1 = adopt; c = 2.
  auto g = new_technology(2);
  EXPECT_EQ(g.payoffs({1, 1, 1}), (std::vector<Rational>{0, 0, 0}));
  EXPECT_EQ(g.payoffs({1, 0, 1}), (std::vector<Rational>{1, -2, 1}));
  EXPECT_EQ(g.payoffs({1, 1, 0}), (std::vector<Rational>{1, 1, -2}));
  EXPECT_EQ(g.payoffs({1, 0, 0}), (std::vector<Rational>{2, -1, -1}));
  EXPECT_EQ(g.payoffs({0, 1, 1}), (std::vector<Rational>{-2, 1, 1}));
  EXPECT_EQ(g.payoffs({0, 0, 1}), (std::vector<Rational>{-1, -1, 2}));
  EXPECT_EQ(g.payoffs({0, 0, 0}), (std::vector<Rational>{0, 0, 0}));
  EXPECT_EQ(g.strategy_names()[0], (std::vector<std::string>{"stay", "adopt"}));
  EXPECT_THROW(new_technology(0), SemanticError);
}

TEST(NewTechnology, Formula) {
  EXPECT_EQ(new_technology_formula(2), "(c(1/2) + (c(1/2) /\\ v2)) - ((c(1/4) /\\ v1) + (c(1/4) /\\ v3))");
  auto lg = new_technology_logical();
  EXPECT_EQ(lg.payoff(0, {1, 0, 0}).str(), "1");
  EXPECT_EQ(lg.payoff(0, {0, 1, 1}).str(), "0");
  EXPECT_TRUE(verify_representation(new_technology_representation(Rational(3, 2))).pass);
}

TEST(MatchingPennies, Tables) {
  auto o = matching_pennies_original();
  EXPECT_EQ(o.payoffs({0, 0}), (std::vector<Rational>{1, -1}));
  EXPECT_EQ(o.payoffs({0, 1}), (std::vector<Rational>{-1, 1}));
  auto r = matching_pennies();
  EXPECT_EQ(r.payoffs({1, 1}), (std::vector<Rational>{1, 0}));
  EXPECT_EQ(r.payoffs({1, 0}), (std::vector<Rational>{0, 1}));
}

TEST(LoveAndHate, Payoffs) {
  auto g = love_and_hate(2, 4);
  // h(x, y) = 2 min(|x-y|, 1-|x-y|)
  EXPECT_EQ(g.payoffs({0, 2}), (std::vector<Rational>{1, 0}));
  EXPECT_EQ(g.payoffs({1, 2}), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(g.payoffs({0, 4}), (std::vector<Rational>{0, 1}));
  auto g4 = love_and_hate(4, 2);
  // Player 4 compares with player 1.
  EXPECT_EQ(g4.payoff(3, {1, 0, 0, 0}), Rational(0));
  EXPECT_EQ(g4.payoff(3, {0, 0, 0, 0}), Rational(1));
  EXPECT_THROW(love_and_hate(3, 4), SemanticError);
  EXPECT_THROW(love_and_hate(2, 3), SemanticError);
}

TEST(LoveAndHate, EtaMatchesH) {
  for (long m : {2L, 4L, 6L}) {
    auto rep = love_and_hate_representation(2, m);
    EXPECT_TRUE(verify_representation(rep).pass) << m;
    EXPECT_EQ(rep.target.classify().full, Tri::kYes);
  }
  EXPECT_TRUE(verify_representation(love_and_hate_representation(4, 2)).pass);
}

TEST(LoveAndHate, ProfileShape) {
  auto mp = love_and_hate_profile(2, 4, {{1, 3}});
  EXPECT_EQ(mixed_str(mp), "(0,1/2,0,1/2,0) ; (0,1/2,0,1/2,0)");
  EXPECT_THROW(love_and_hate_profile(2, 4, {}), InputError);
  EXPECT_THROW(love_and_hate_profile(2, 4, {{1, 1}}), SemanticError);
}

TEST(Vickrey, Payoffs) {
  std::vector<Rational> p{Rational(3, 4), Rational(1, 2), Rational(1, 4)};
  auto grid = vickrey_grid(1, 4);
  auto g = vickrey(p, 1, grid);
  // Bids 3/4, 1/2, 1/4: player 1 wins and pays 1/2.
  EXPECT_EQ(g.payoffs({3, 2, 1}), (std::vector<Rational>{Rational(1, 4), 0, 0}));
  // Tie at the top goes to the lowest index.
  EXPECT_EQ(g.payoffs({2, 2, 0}), (std::vector<Rational>{Rational(1, 4), 0, 0}));
  EXPECT_EQ(g.payoffs({0, 4, 0}), (std::vector<Rational>{0, Rational(1, 2), 0}));
  EXPECT_EQ(vickrey_code(2, 1), Rational(3, 4));
  EXPECT_THROW(vickrey(p, 1, {0, 2}), SemanticError);
  EXPECT_THROW(vickrey({Rational(1, 2)}, 1, grid), SemanticError);
}

TEST(Vickrey, RepresentationAndEquilibria) {
  std::vector<Rational> p{Rational(3, 4), Rational(1, 2), Rational(1, 4)};
  auto grid = vickrey_grid(1, 4);
  auto rep = vickrey_representation(p, 1, grid);
  EXPECT_TRUE(verify_representation(rep).pass);
  EXPECT_EQ(rep.target.algebra().name(), "STD_QL_DELTA");
  auto ne = pure_ne_scan(rep.source);
  auto has = [&](Profile q) { return std::find(ne.begin(), ne.end(), q) != ne.end(); };
  EXPECT_TRUE(has({3, 2, 1}));  // truthful
  EXPECT_TRUE(has({3, 0, 0}));  // (p1, 0, 0)
  EXPECT_TRUE(has({2, 3, 0}));  // (p2, p1, 0)
}

}  // namespace
