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

#ifndef QDUOPOLY_SCHEME_RSM_H_
#define QDUOPOLY_SCHEME_RSM_H_

#include "qduopoly/eq_solver.h"
#include "qduopoly/market.h"
#include "qduopoly/qstate.h"

// Reduced-state measurement scheme. The entangler
// I(gamma) = cos(gamma) 1 (x) 1 + i sin(gamma) sigma_x (x) sigma_x acts on |00>,
// and each firm's quantity is the expectation of a strategy-valued diagonal
// operator in its reduced state:
//   q1 = x1 cos^2(gamma) + x2 sin^2(gamma),  q2 = x2 cos^2(gamma) + x1 sin^2(gamma).
// Entanglement redistributes total quantity but never changes it.

namespace qduopoly {
namespace rsm {

inline constexpr double kQuarterPi = 0.78539816339744830962;
// gamma within this distance of pi/4 is treated as maximal entanglement.
inline constexpr double kGammaTol = 1e-12;

class RsmStrategy {
 public:
  // Requires x1, x2 >= 0 and gamma in [0, pi/4].
  RsmStrategy(double x1, double x2, double gamma);

  double x1() const { return x1_; }
  double x2() const { return x2_; }
  double gamma() const { return gamma_; }

 private:
  double x1_;
  double x2_;
  double gamma_;
};

// cos(gamma)|00> + i sin(gamma)|11>.
quantum::TwoQubitState EntangledState(double gamma);

struct StrategyObservables {
  quantum::QubitObservable first;   // x1 |0><0| + x2 |1><1|
  quantum::QubitObservable second;  // x2 |0><0| + x1 |1><1|
};

StrategyObservables MakeStrategyObservables(double x1, double x2);

// Matrix path: entangled state, partial traces, expectations.
QuantityPair QuantityMap(const RsmStrategy& s);

// q_i (a - c - x1 - x2) when x1 + x2 <= a, else -c q_i.
double Payoff(Player player, const RsmStrategy& s, const MarketParams& params);

eq::PayoffPair Game(double gamma, const MarketParams& params);

// [(a-c) cos^2 - x] / (2 cos^2) for x <= (a-c) cos^2, else 0. Requires c > 0.
double BestReply(Player player, double opponent, double gamma,
                 const MarketParams& params);

// gamma < pi/4: the point (a-c) cos^2 / (2 cos^2 + 1) on both axes.
// gamma = pi/4: the segment from (0, (a-c)/2) to ((a-c)/2, 0), with seven
// evenly spaced representatives. Every representative is certified on
// [0, a] with 401 points per axis. Requires c > 0.
eq::EquilibriumResult EquilibriumSet(double gamma, const MarketParams& params);

// Payoff of player 1 at the equilibrium profile, by substitution into Payoff.
double EquilibriumPayoff(double gamma, const MarketParams& params);

}  // namespace rsm
}  // namespace qduopoly

#endif  // QDUOPOLY_SCHEME_RSM_H_
