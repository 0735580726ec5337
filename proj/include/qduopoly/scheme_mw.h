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

#ifndef QDUOPOLY_SCHEME_MW_H_
#define QDUOPOLY_SCHEME_MW_H_

#include <array>
#include <optional>

#include "qduopoly/eq_solver.h"
#include "qduopoly/market.h"
#include "qduopoly/qstate.h"

// Probabilistic bit-flip quantum Cournot scheme. Each firm's quantity q_i is
// turned into the probability 1/(1+q_i) of leaving its qubit alone, the
// initial state is mixed accordingly, and payoffs are expectations of a
// diagonal payoff operator. Payoffs are always computed through that trace.

namespace qduopoly {
namespace mw {

struct ProbabilityMap {
  double x = 1.0;  // player 1 applies the identity
  double y = 1.0;  // player 2 applies the identity
};

ProbabilityMap ToProbabilities(const QuantityPair& q);

enum class OperatorKind { kM, kMPrime, kMDoublePrime, kGeneral };

// Per-player coefficients (x1..x4) of the general diagonal payoff operator.
struct GeneralCoefficients {
  std::array<double, 4> player1{};
  std::array<double, 4> player2{};
};

class OperatorVariant {
 public:
  static OperatorVariant M() { return OperatorVariant(OperatorKind::kM); }
  static OperatorVariant MPrime() {
    return OperatorVariant(OperatorKind::kMPrime);
  }
  static OperatorVariant MDoublePrime() {
    return OperatorVariant(OperatorKind::kMDoublePrime);
  }
  static OperatorVariant General(const GeneralCoefficients& coefficients);

  OperatorKind kind() const { return kind_; }
  const GeneralCoefficients& coefficients() const { return coefficients_; }

 private:
  explicit OperatorVariant(OperatorKind kind) : kind_(kind) {}

  OperatorKind kind_;
  GeneralCoefficients coefficients_;
};

quantum::TwoQubitState FinalState(const QuantityPair& q,
                                  const quantum::TwoQubitState& rho_in);

// Weights in basis order |00>, |01>, |10>, |11>, all scaled by (1+q1)(1+q2):
//   M:   q_i (a-c, -1, -1, 0)
//   M':  as M when q1 + q2 <= a, else q_i (-c, 0, 0, 0)
//   M'': player 1 ((a-c) q1, 0, -q1, -1), player 2 ((a-c) q2, -q2, 0, -1)
//   General: (x1, x2, x3, x4) of the player
quantum::DiagonalObservable PayoffOperator(const OperatorVariant& variant,
                                           Player player, const QuantityPair& q,
                                           const MarketParams& params);

double Payoff(Player player, const QuantityPair& q,
              const quantum::TwoQubitState& rho_in,
              const OperatorVariant& variant, const MarketParams& params);

// Payoff under the price-aware operator M'.
double RefinedPayoff(Player player, const QuantityPair& q,
                     const quantum::TwoQubitState& rho_in,
                     const MarketParams& params);

eq::PayoffPair Game(const quantum::TwoQubitState& rho_in,
                    const OperatorVariant& variant, const MarketParams& params);

// (c + sqrt(c^2 + 16)) / 2: smallest a for which (a/2, a/2) is an equilibrium
// of the refined |11> game.
double HalfEquilibriumThreshold(double c);

struct HalfEquilibriumReport {
  double threshold = 0.0;
  bool condition_holds = false;
  eq::EpsNashReport report;
  PayoffValues payoffs;
};

// Checks (a/2, a/2) against every grid deviation of the refined |11> game,
// with eps = 2(a + c) * h. Requires c > 0.
HalfEquilibriumReport CheckHalfEquilibrium(const MarketParams& params,
                                           const eq::GridSpec& grid);

struct TrivialOperatorSolution {
  int rank = 0;
  int nullity = 0;  // dimension of the solution manifold when singular
  bool singular = false;
  std::optional<std::array<double, 4>> coefficients;
  // Common value q_i (a-c-q1-q2) / ((1+q1)(1+q2)) of a nonsingular solution.
  double expected = 0.0;
};

// Solves for the general-operator coefficients that reproduce the classical
// payoff q_i (a-c-q1-q2) for each of the four basis initial states. The
// system is solved with a full-pivoting LU; rank deficiency (q1 = 1 or
// q2 = 1) is reported rather than thrown.
TrivialOperatorSolution SolveTrivialOperator(const QuantityPair& q,
                                             Player player,
                                             const MarketParams& params);

// Quantities with payoff of player 1 (initial |11>, operator M) above
// `target`, found by doubling q1 = q2 from 1.
QuantityPair UnboundednessWitness(const MarketParams& params, double target);

// Payoffs of the quantum Bertrand scheme with initial state
// cos(gamma)|00> + sin(gamma)|11>.
PayoffValues BertrandQuantumPayoffs(double p1, double p2, double gamma,
                                    const BertrandParams& params);

// Price p2 such that the joint payoff at (0, p2), gamma = pi/2 exceeds
// `target`, found by doubling p2 from 1.
double BertrandDivergenceWitness(const BertrandParams& params, double target);

struct HullReport {
  bool violated = false;
  double classical_joint_max = 0.0;  // (a-c)^2 / 4
  std::optional<QuantityPair> witness;
  PayoffValues witness_payoffs;
  // Refined |11> payoff at (a/2, a/2); present when the threshold holds.
  std::optional<double> half_equilibrium_payoff;
};

// Searches for a payoff profile of the scheme (operator M, basis initial state
// |j1 j2>) whose joint payoff exceeds the classical joint maximum: a doubling
// search along q1 = q2 plus a scan of [0, a]^2. Requires c > 0.
HullReport ConvexHullViolationCheck(const MarketParams& params, int j1 = 1,
                                    int j2 = 1);

}  // namespace mw
}  // namespace qduopoly

#endif  // QDUOPOLY_SCHEME_MW_H_
