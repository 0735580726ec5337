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

#include "qduopoly/market.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qduopoly {
namespace {

constexpr int kCertificationPoints = 601;

void RequireFinite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

MarketParams::MarketParams(double a, double c) : a_(a), c_(c) {
  RequireFinite(a, "a");
  RequireFinite(c, "c");
  if (!(c >= 0.0)) throw std::invalid_argument("c >= 0 violated");
  if (!(a > c)) throw std::invalid_argument("a > c violated");
}

BertrandParams::BertrandParams(double a, double b, double c)
    : a_(a), b_(b), c_(c) {
  RequireFinite(a, "a");
  RequireFinite(b, "b");
  RequireFinite(c, "c");
  if (!(b > 0.0 && b < 1.0)) throw std::invalid_argument("0 < b < 1 violated");
  if (!(c >= 0.0)) throw std::invalid_argument("c >= 0 violated");
  if (!(a - c * (1.0 - b) > 0.0)) {
    throw std::invalid_argument("a > c (1 - b) violated");
  }
}

QuantityPair::QuantityPair(double q1, double q2) : q1_(q1), q2_(q2) {
  if (!(q1 >= 0.0) || !(q2 >= 0.0)) {
    throw std::invalid_argument("quantities must be nonnegative");
  }
}

namespace market {

double Price(const QuantityPair& q, const MarketParams& params) {
  const double total = q.Total();
  return total <= params.a() ? params.a() - total : 0.0;
}

double CournotPayoff(Player player, const QuantityPair& q,
                     const MarketParams& params) {
  const double qi = q.Get(player);
  return qi * Price(q, params) - params.c() * qi;
}

eq::PayoffPair CournotGame(const MarketParams& params) {
  return {
      [params](double s1, double s2) {
        return CournotPayoff(Player::kFirst, {s1, s2}, params);
      },
      [params](double s1, double s2) {
        return CournotPayoff(Player::kSecond, {s1, s2}, params);
      },
  };
}

eq::EquilibriumResult ClassicalEquilibrium(const MarketParams& params) {
  const eq::PayoffPair game = CournotGame(params);
  eq::EquilibriumResult result;
  if (params.c() > 0.0) {
    const double q = params.margin() / 3.0;
    result.kind = eq::EquilibriumKind::kPoint;
    result.point = {q, q};
    const eq::GridSpec grid(params.a(), kCertificationPoints);
    eq::AddRepresentative(result, game, result.point, grid,
                          eq::LipschitzEps(params.Lipschitz(), grid));
  } else {
    result.kind = eq::EquilibriumKind::kRegion;
    result.region = {params.a(), params.a()};
    const eq::GridSpec grid(2.0 * params.a(), kCertificationPoints);
    eq::AddRepresentative(result, game, {params.a(), params.a()}, grid,
                          eq::LipschitzEps(params.Lipschitz(), grid));
  }
  return result;
}

MonopolyOutcome MonopolyBound(const MarketParams& params) {
  if (!(params.c() > 0.0)) {
    throw std::invalid_argument("monopoly bound requires c > 0");
  }
  const double m = params.margin();
  return {m / 2.0, m * m / 4.0};
}

PayoffValues BertrandPayoffs(double p1, double p2,
                             const BertrandParams& params) {
  const double a = params.a(), b = params.b(), c = params.c();
  return {(a - p1 + b * p2) * (p1 - c), (a - p2 + b * p1) * (p2 - c)};
}

eq::PayoffPair BertrandGame(const BertrandParams& params) {
  return {
      [params](double p1, double p2) {
        return BertrandPayoffs(p1, p2, params).u1;
      },
      [params](double p1, double p2) {
        return BertrandPayoffs(p1, p2, params).u2;
      },
  };
}

double BertrandJointSupremum(const BertrandParams& params) {
  const double one_minus_b = 1.0 - params.b();
  const double t = params.a() - params.c() * one_minus_b;
  return t * t / (2.0 * one_minus_b);
}

}  // namespace market
}  // namespace qduopoly
