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

#ifndef QDUOPOLY_SCHEME_LDM_H_
#define QDUOPOLY_SCHEME_LDM_H_

#include "qduopoly/eq_solver.h"
#include "qduopoly/market.h"

// Entangled-field quantum Cournot scheme. Each firm displaces its own bosonic
// mode by x_i, the two modes are squeezed together with strength gamma, and
// the measured quadratures become the quantities
//   q1 = x1 cosh(gamma) + x2 sinh(gamma),  q2 = x2 cosh(gamma) + x1 sinh(gamma).
// Runtime payoffs use that closed form; FockVerifyQuantityMap reproduces it
// from truncated creation/annihilation operators.

namespace qduopoly {
namespace ldm {

class LdmStrategy {
 public:
  LdmStrategy(double x1, double x2, double gamma);

  double x1() const { return x1_; }
  double x2() const { return x2_; }
  double gamma() const { return gamma_; }
  double Get(Player p) const { return p == Player::kFirst ? x1_ : x2_; }

 private:
  double x1_;
  double x2_;
  double gamma_;
};

enum class PayoffForm {
  kOriginal,  // q_i (a - c - e^gamma (x1 + x2)) everywhere
  kRefined,   // -c q_i once e^gamma (x1 + x2) exceeds a
};

QuantityPair QuantityMap(const LdmStrategy& s);

double Payoff(Player player, const LdmStrategy& s, const MarketParams& params,
              PayoffForm form);

eq::PayoffPair Game(double gamma, const MarketParams& params, PayoffForm form);

// Pre-image box edge a e^-gamma; with c > 0 no best reply lies beyond it.
double StrategyBound(double gamma, const MarketParams& params);

// Best reply under the refined payoff:
//   [(a-c) cosh(gamma) - e^{2 gamma} x] / (e^{2 gamma} + 1)
// for x <= (a-c) e^{-2 gamma} cosh(gamma), else 0. Requires c > 0.
double BestReply(Player player, double opponent, double gamma,
                 const MarketParams& params);

// Refined-payoff equilibrium. c > 0: the symmetric point
// (a-c) cosh(gamma) / (1 + 2 e^{2 gamma}), certified on [0, a e^-gamma] with
// 401 points per axis. c = 0: the region {x1, x2 >= a e^-gamma}.
eq::EquilibriumResult Equilibrium(double gamma, const MarketParams& params);

struct ParetoOutcome {
  StrategyProfile profile;    // ((a-c) e^-gamma / 4, same)
  double payoff = 0.0;        // per player, (a-c)^2 / 8
  double line_sum = 0.0;      // maximizers satisfy x1 + x2 = line_sum
};

ParetoOutcome ParetoSymmetricOptimum(double gamma, const MarketParams& params);

class FockConfig {
 public:
  explicit FockConfig(int cutoff);

  int cutoff() const { return cutoff_; }

 private:
  int cutoff_;
};

struct FockReport {
  double q1 = 0.0;
  double q2 = 0.0;
  // Largest probability of occupying either of the top two levels of either
  // mode, over the intermediate and final states.
  double tail_mass = 0.0;
  // Estimated bound on the truncation error of q1 and q2.
  double accuracy_bound = 0.0;
  bool tail_ok = false;  // tail_mass < 1e-8
};

inline constexpr double kFockTailLimit = 1e-8;

// Builds the two-mode Fock space truncated at `cutoff` photons per mode,
// applies J(gamma)^dagger (D1(x1) (x) D2(x2)) J(gamma) to the vacuum and
// returns the quadrature expectations <X1>, <X2>.
FockReport FockVerifyQuantityMap(const LdmStrategy& s, const FockConfig& cfg);

}  // namespace ldm
}  // namespace qduopoly

#endif  // QDUOPOLY_SCHEME_LDM_H_
