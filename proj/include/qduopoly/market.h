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

#ifndef QDUOPOLY_MARKET_H_
#define QDUOPOLY_MARKET_H_

#include "qduopoly/eq_solver.h"

// Classical Cournot and Bertrand duopolies. Every quantum scheme in this
// library must reduce to these payoffs in its classical limit.

namespace qduopoly {

// Linear inverse demand P = max(a - q1 - q2, 0) with marginal cost c.
// Requires a > c >= 0; c = 0 is admitted for the degenerate continuum case.
class MarketParams {
 public:
  MarketParams(double a, double c);

  double a() const { return a_; }
  double c() const { return c_; }
  double margin() const { return a_ - c_; }
  // Lipschitz bound used for grid-step-scaled certification, 2(a + c).
  double Lipschitz() const { return 2.0 * (a_ + c_); }

 private:
  double a_;
  double c_;
};

// Differentiated-goods Bertrand market: q_i = a - p_i + b p_j.
class BertrandParams {
 public:
  // Requires 0 < b < 1, c >= 0 and a > c (1 - b), so that symmetric prices
  // above cost can earn a positive joint profit.
  BertrandParams(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  // Default price box edge 4a / (1 - b); both payoffs decrease beyond it.
  double PriceBound() const { return 4.0 * a_ / (1.0 - b_); }

 private:
  double a_;
  double b_;
  double c_;
};

class QuantityPair {
 public:
  QuantityPair(double q1, double q2);

  double q1() const { return q1_; }
  double q2() const { return q2_; }
  double Get(Player p) const { return p == Player::kFirst ? q1_ : q2_; }
  double Total() const { return q1_ + q2_; }

 private:
  double q1_;
  double q2_;
};

namespace market {

double Price(const QuantityPair& q, const MarketParams& params);

// q_i * P(q) - c * q_i.
double CournotPayoff(Player player, const QuantityPair& q,
                     const MarketParams& params);

eq::PayoffPair CournotGame(const MarketParams& params);

// c > 0: the unique point ((a-c)/3, (a-c)/3). c = 0: the region
// {q1 >= a, q2 >= a} with payoff 0, marked non-unique. Representatives are
// certified on [0, a] (c > 0) or [0, 2a] (c = 0) with 601 points per axis.
eq::EquilibriumResult ClassicalEquilibrium(const MarketParams& params);

struct MonopolyOutcome {
  double quantity = 0.0;
  double payoff = 0.0;
};

// ((a-c)/2, (a-c)^2/4). Requires c > 0.
MonopolyOutcome MonopolyBound(const MarketParams& params);

PayoffValues BertrandPayoffs(double p1, double p2,
                             const BertrandParams& params);

eq::PayoffPair BertrandGame(const BertrandParams& params);

// sup over nonnegative prices of u1 + u2: [a - c(1-b)]^2 / (2(1-b)).
double BertrandJointSupremum(const BertrandParams& params);

}  // namespace market
}  // namespace qduopoly

#endif  // QDUOPOLY_MARKET_H_
