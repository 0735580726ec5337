// Copyright 2026 The qduopoly Authors
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


#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qduopoly/eq_solver.h"
#include "qduopoly/market.h"

namespace qduopoly {
namespace {

using market::BertrandPayoffs;
using market::CournotPayoff;
using market::Price;

// Independent grid oracle: argmax and max of f over [0, xmax] with n points.
template <typename F>
std::pair<double, double> GridMax(F f, double xmax, int n) {
  double best_x = 0.0, best = f(0.0);
  for (int k = 1; k < n; ++k) {
    const double x = xmax * k / (n - 1);
    const double v = f(x);
    if (v > best) best = v, best_x = x;
  }
  return {best_x, best};
}

TEST_CASE("MarketParams rejects invalid parameters") {
  CHECK_THROWS_WITH_AS(MarketParams(3, 5), "a > c violated", std::invalid_argument);
  CHECK_THROWS_WITH_AS(MarketParams(3, 3), "a > c violated", std::invalid_argument);
  CHECK_THROWS_WITH_AS(MarketParams(3, -1), "c >= 0 violated", std::invalid_argument);
  CHECK_NOTHROW(MarketParams(1, 0));
  CHECK_THROWS_AS(BertrandParams(1, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(BertrandParams(1, 0.0, 0), std::invalid_argument);
  CHECK_NOTHROW(BertrandParams(2, 0.5, 2));
  CHECK_THROWS_WITH_AS(BertrandParams(1, 0.5, 3), "a > c (1 - b) violated",
                       std::invalid_argument);
  CHECK_THROWS_AS(QuantityPair(-1, 0), std::invalid_argument);
}

TEST_CASE("Price is the truncated linear demand") {
  const MarketParams p(30, 3);
  CHECK(Price({5, 5}, p) == doctest::Approx(20));
  CHECK(Price({10, 25}, p) == 0.0);
  CHECK(Price({30, 0}, p) == 0.0);
}

TEST_CASE("Cournot payoff examples") {
  const MarketParams p(30, 3);
  CHECK(CournotPayoff(Player::kFirst, {9, 9}, p) == doctest::Approx(81));
  CHECK(CournotPayoff(Player::kFirst, {0, 17}, p) == 0.0);
  CHECK(CournotPayoff(Player::kFirst, {20, 15}, p) == doctest::Approx(-60));
  CHECK(CournotPayoff(Player::kSecond, {20, 15}, p) == doctest::Approx(-45));
  // Zero-price branch agrees with the linear branch at the boundary.
  CHECK(CournotPayoff(Player::kFirst, {10, 20}, p) == doctest::Approx(-30));
}

TEST_CASE("Classical equilibrium") {
  SUBCASE("a=30, c=3") {
    const auto r = market::ClassicalEquilibrium(MarketParams(30, 3));
    REQUIRE(r.kind == eq::EquilibriumKind::kPoint);
    CHECK(r.point.s1 == doctest::Approx(9));
    CHECK(r.point.s2 == doctest::Approx(9));
    CHECK(r.payoffs.at(0).u1 == doctest::Approx(81));
    CHECK(r.certified());
  }
  SUBCASE("a=4, c=1 against a best-reply oracle") {
    const MarketParams p(4, 1);
    const auto r = market::ClassicalEquilibrium(p);
    CHECK(r.point.s1 == doctest::Approx(1));
    CHECK(r.payoffs.at(0).u2 == doctest::Approx(1));
    const auto [x, v] = GridMax(
        [&](double q) { return CournotPayoff(Player::kFirst, {q, 1.0}, p); }, 4,
        4001);
    CHECK(x == doctest::Approx(1).epsilon(1e-3));
    CHECK(v == doctest::Approx(1).epsilon(1e-6));
  }
  SUBCASE("c=0 gives the unbounded region") {
    const auto r = market::ClassicalEquilibrium(MarketParams(1, 0));
    REQUIRE(r.kind == eq::EquilibriumKind::kRegion);
    CHECK_FALSE(r.unique());
    CHECK(r.region.lower1 == 1.0);
    CHECK(r.region.lower2 == 1.0);
    CHECK(r.payoffs.at(0).u1 == 0.0);
    CHECK(r.certified());
  }
}

TEST_CASE("Monopoly bound matches a grid argmax") {
  for (auto [a, c] : {std::pair{30.0, 3.0}, {5.0, 3.0}, {3.0, 1.0}}) {
    const MarketParams p(a, c);
    const auto m = market::MonopolyBound(p);
    const auto [x, v] = GridMax(
        [&](double q) { return CournotPayoff(Player::kFirst, {q, 0.0}, p); }, a,
        20001);
    CHECK(m.quantity == doctest::Approx(x).epsilon(1e-3));
    CHECK(m.payoff == doctest::Approx(v).epsilon(1e-6));
  }
  CHECK(market::MonopolyBound(MarketParams(30, 3)).payoff == doctest::Approx(182.25));
}

TEST_CASE("Bertrand payoffs") {
  const BertrandParams p(2, 0.5, 1);
  auto v = BertrandPayoffs(1, 1, p);
  CHECK(v.u1 == 0.0);
  CHECK(v.u2 == 0.0);
  v = BertrandPayoffs(0, 0, p);
  CHECK(v.u1 == doctest::Approx(-2));
  CHECK(v.u2 == doctest::Approx(-2));
  // Hand evaluation: (3 - 1 + 0.5 * 2) * 1 and (3 - 2 + 0.5 * 1) * 2.
  v = BertrandPayoffs(1, 2, BertrandParams(3, 0.5, 0));
  CHECK(v.u1 == doctest::Approx(3));
  CHECK(v.u2 == doctest::Approx(3));
}

TEST_CASE("Bertrand joint supremum matches a grid scan") {
  struct Case {
    double a, b, c, expected;
  };
  for (const Case& k : {Case{1, 0.5, 0, 1}, Case{2, 0.5, 2, 1}, Case{1, 0.9, 0, 5}}) {
    const BertrandParams p(k.a, k.b, k.c);
    CHECK(market::BertrandJointSupremum(p) == doctest::Approx(k.expected));
    // Symmetric prices maximize the joint payoff; scan the diagonal finely.
    const auto [x, v] = GridMax(
        [&](double s) { return BertrandPayoffs(s, s, p).Sum(); }, p.PriceBound(),
        200001);
    CHECK(v == doctest::Approx(k.expected).epsilon(1e-6));
  }
}

}  // namespace
}  // namespace qduopoly
