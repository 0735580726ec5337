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

#include "qduopoly/scheme_rsm.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qduopoly {
namespace rsm {
namespace {

constexpr int kCertificationPoints = 401;
constexpr int kSegmentSamples = 7;

double CheckedGamma(double gamma) {
  if (!(gamma >= 0.0) || !(gamma <= kQuarterPi + kGammaTol)) {
    throw std::invalid_argument("gamma in [0, pi/4] violated");
  }
  return std::min(gamma, kQuarterPi);
}

bool IsMaximal(double gamma) { return std::abs(gamma - kQuarterPi) <= kGammaTol; }

double Cos2(double gamma) { return std::cos(gamma) * std::cos(gamma); }

void RequirePositiveCost(const MarketParams& params) {
  if (!(params.c() > 0.0)) throw std::invalid_argument("requires c > 0");
}

}  // namespace

RsmStrategy::RsmStrategy(double x1, double x2, double gamma)
    : x1_(x1), x2_(x2), gamma_(CheckedGamma(gamma)) {
  if (!(x1 >= 0.0) || !(x2 >= 0.0)) {
    throw std::invalid_argument("strategies must be nonnegative");
  }
}

quantum::TwoQubitState EntangledState(double gamma) {
  gamma = CheckedGamma(gamma);
  return quantum::PureState({quantum::Complex(std::cos(gamma), 0.0), 0.0, 0.0,
                             quantum::Complex(0.0, std::sin(gamma))});
}

StrategyObservables MakeStrategyObservables(double x1, double x2) {
  if (!(x1 >= 0.0) || !(x2 >= 0.0)) {
    throw std::invalid_argument("strategies must be nonnegative");
  }
  return {{{x1, x2}}, {{x2, x1}}};
}

QuantityPair QuantityMap(const RsmStrategy& s) {
  const quantum::TwoQubitState state = EntangledState(s.gamma());
  const StrategyObservables obs = MakeStrategyObservables(s.x1(), s.x2());
  const double q1 = quantum::Expectation(
      quantum::PartialTrace(state, quantum::Qubit::kFirst), obs.first);
  const double q2 = quantum::Expectation(
      quantum::PartialTrace(state, quantum::Qubit::kSecond), obs.second);
  return {std::max(q1, 0.0), std::max(q2, 0.0)};
}

double Payoff(Player player, const RsmStrategy& s, const MarketParams& params) {
  const double qi = QuantityMap(s).Get(player);
  const double total = s.x1() + s.x2();
  if (total > params.a()) return -params.c() * qi;
  return qi * (params.margin() - total);
}

eq::PayoffPair Game(double gamma, const MarketParams& params) {
  gamma = CheckedGamma(gamma);
  return {
      [=](double x1, double x2) {
        return Payoff(Player::kFirst, {x1, x2, gamma}, params);
      },
      [=](double x1, double x2) {
        return Payoff(Player::kSecond, {x1, x2, gamma}, params);
      },
  };
}

double BestReply(Player /*player*/, double opponent, double gamma,
                 const MarketParams& params) {
  gamma = CheckedGamma(gamma);
  RequirePositiveCost(params);
  if (!(opponent >= 0.0)) throw std::invalid_argument("opponent strategy < 0");
  const double cos2 = Cos2(gamma);
  if (opponent > params.margin() * cos2) return 0.0;
  return (params.margin() * cos2 - opponent) / (2.0 * cos2);
}

eq::EquilibriumResult EquilibriumSet(double gamma, const MarketParams& params) {
  gamma = CheckedGamma(gamma);
  RequirePositiveCost(params);
  const eq::PayoffPair game = Game(gamma, params);
  const eq::GridSpec grid(params.a(), kCertificationPoints);
  const double eps = eq::LipschitzEps(params.Lipschitz(), grid);
  eq::EquilibriumResult result;
  if (IsMaximal(gamma)) {
    const double half = params.margin() / 2.0;
    result.kind = eq::EquilibriumKind::kSegment;
    result.segment_begin = {0.0, half};
    result.segment_end = {half, 0.0};
    for (const StrategyProfile& p : result.SampleSegment(kSegmentSamples)) {
      eq::AddRepresentative(result, game, p, grid, eps);
    }
  } else {
    const double cos2 = Cos2(gamma);
    const double x = params.margin() * cos2 / (2.0 * cos2 + 1.0);
    result.kind = eq::EquilibriumKind::kPoint;
    result.point = {x, x};
    eq::AddRepresentative(result, game, result.point, grid, eps);
  }
  return result;
}

double EquilibriumPayoff(double gamma, const MarketParams& params) {
  gamma = CheckedGamma(gamma);
  RequirePositiveCost(params);
  StrategyProfile p;
  if (IsMaximal(gamma)) {
    p = {params.margin() / 4.0, params.margin() / 4.0};
  } else {
    const double cos2 = Cos2(gamma);
    const double x = params.margin() * cos2 / (2.0 * cos2 + 1.0);
    p = {x, x};
  }
  return Payoff(Player::kFirst, {p.s1, p.s2, gamma}, params);
}

}  // namespace rsm
}  // namespace qduopoly
