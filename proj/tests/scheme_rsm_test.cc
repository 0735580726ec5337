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
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "qduopoly/eq_solver.h"
#include "qduopoly/scheme_rsm.h"

namespace qduopoly {
namespace rsm {
namespace {

constexpr double kPi = 3.14159265358979323846;

TEST_CASE("Validation") {
  CHECK_THROWS_AS(RsmStrategy(1, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(RsmStrategy(1, 1, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(RsmStrategy(-1, 1, 0.1), std::invalid_argument);
  CHECK_NOTHROW(RsmStrategy(1, 1, kQuarterPi + 1e-13));
  CHECK_THROWS_AS(EquilibriumSet(0.1, MarketParams(1, 0)), std::invalid_argument);
}

TEST_CASE("Entangled state and reductions") {
  CHECK((EntangledState(0).matrix() - quantum::BasisState(0, 0).matrix()).norm() <
        1e-15);
  for (auto q : {quantum::Qubit::kFirst, quantum::Qubit::kSecond}) {
    const auto r = quantum::PartialTrace(EntangledState(kQuarterPi), q);
    CHECK(r(0, 0).real() == doctest::Approx(0.5));
    CHECK(r(1, 1).real() == doctest::Approx(0.5));
  }
  const auto r6 = quantum::PartialTrace(EntangledState(kPi / 6), quantum::Qubit::kFirst);
  CHECK(r6(0, 0).real() == doctest::Approx(0.75));
  CHECK(r6(1, 1).real() == doctest::Approx(0.25));
}

TEST_CASE("Strategy observables") {
  const StrategyObservables o = MakeStrategyObservables(2, 5);
  CHECK(o.first.weights == std::array<double, 2>{2, 5});
  CHECK(o.second.weights == std::array<double, 2>{5, 2});
  const StrategyObservables u = MakeStrategyObservables(1, 0);
  CHECK(u.first.weights == std::array<double, 2>{1, 0});
  CHECK(u.second.weights == std::array<double, 2>{0, 1});
}

TEST_CASE("Quantity map") {
  const QuantityPair q0 = QuantityMap({4, 7, 0});
  CHECK(q0.q1() == doctest::Approx(4));
  CHECK(q0.q2() == doctest::Approx(7));
  const QuantityPair qm = QuantityMap({4, 7, kQuarterPi});
  CHECK(qm.q1() == doctest::Approx(5.5));
  CHECK(qm.q2() == doctest::Approx(5.5));
  const QuantityPair q6 = QuantityMap({1, 0, kPi / 6});
  CHECK(q6.q1() == doctest::Approx(0.75));
  CHECK(q6.q2() == doctest::Approx(0.25));
}

TEST_CASE("Matrix path equals the closed form and conserves total quantity") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> x(0.0, 50.0), g(0.0, kQuarterPi);
  for (int k = 0; k < 500; ++k) {
    const RsmStrategy s(x(rng), x(rng), g(rng));
    const QuantityPair q = QuantityMap(s);
    const double c2 = std::cos(s.gamma()) * std::cos(s.gamma());
    const double s2 = std::sin(s.gamma()) * std::sin(s.gamma());
    REQUIRE(std::abs(q.q1() - (s.x1() * c2 + s.x2() * s2)) <= 1e-12 * 50);
    REQUIRE(std::abs(q.q2() - (s.x2() * c2 + s.x1() * s2)) <= 1e-12 * 50);
    REQUIRE(q.Total() == doctest::Approx(s.x1() + s.x2()).epsilon(1e-13));
  }
}

TEST_CASE("Payoff examples") {
  const MarketParams p(30, 3);
  CHECK(Payoff(Player::kFirst, {9, 9, 0}, p) == doctest::Approx(81));
  CHECK(Payoff(Player::kFirst, {20, 20, 0.4}, p) == doctest::Approx(-60));
  CHECK(Payoff(Player::kFirst, {6.75, 6.75, kQuarterPi}, p) == doctest::Approx(91.125));
}

TEST_CASE("Best reply") {
  const MarketParams p(30, 3);
  CHECK(BestReply(Player::kFirst, 0, 0, p) == doctest::Approx(13.5));
  const double g = 0.4;
  const double edge = 27 * std::cos(g) * std::cos(g);
  CHECK(BestReply(Player::kFirst, edge, g, p) == doctest::Approx(0).epsilon(1e-12));
  // (27 * 3/4 - 3) / (2 * 3/4).
  CHECK(BestReply(Player::kFirst, 3, kPi / 6, p) == doctest::Approx(11.5));
  const eq::GridSpec grid(30, 30001);
  const eq::PayoffPair game = Game(kPi / 6, p);
  CHECK(std::abs(eq::GridBestResponse(game.u1, Player::kFirst, 3, grid) - 11.5) <=
        grid.step());
}

TEST_CASE("Equilibrium set") {
  const MarketParams p(30, 3);
  const auto r0 = EquilibriumSet(0, p);
  REQUIRE(r0.kind == eq::EquilibriumKind::kPoint);
  CHECK(r0.point.s1 == doctest::Approx(9));
  CHECK(r0.certified());
  const auto r6 = EquilibriumSet(kPi / 6, p);
  CHECK(r6.point.s1 == doctest::Approx(8.1));
  CHECK(r6.point.s2 == doctest::Approx(8.1));
  CHECK(r6.certified());
  const auto rq = EquilibriumSet(kQuarterPi, p);
  REQUIRE(rq.kind == eq::EquilibriumKind::kSegment);
  CHECK_FALSE(rq.unique());
  CHECK(rq.segment_begin.s1 + rq.segment_begin.s2 == doctest::Approx(13.5));
  CHECK(rq.segment_end.s1 + rq.segment_end.s2 == doctest::Approx(13.5));
  CHECK(rq.representatives.size() >= 2);
  CHECK(rq.certified());
}

TEST_CASE("Equilibrium payoff") {
  const MarketParams p(30, 3);
  CHECK(EquilibriumPayoff(0, p) == doctest::Approx(81).epsilon(1e-12));
  CHECK(EquilibriumPayoff(kQuarterPi, p) == doctest::Approx(91.125).epsilon(1e-12));
  CHECK(EquilibriumPayoff(kPi / 6, p) ==
        doctest::Approx(Payoff(Player::kFirst, {8.1, 8.1, kPi / 6}, p)));
  double last = 0.0;
  for (int k = 0; k <= 50; ++k) {
    const double v = EquilibriumPayoff(kQuarterPi * k / 50, p);
    CHECK(v >= last - 1e-9);
    last = v;
  }
}

}  // namespace
}  // namespace rsm
}  // namespace qduopoly
