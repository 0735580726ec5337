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

#include "qduopoly/scheme_mw.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qduopoly {
namespace mw {
namespace {

using quantum::DiagonalObservable;
using quantum::TwoQubitState;

constexpr int kMaxDoublings = 200;
constexpr int kHullSearchDoublings = 40;
constexpr int kHullScanPoints = 121;

double Normalizer(const QuantityPair& q) {
  return (1.0 + q.q1()) * (1.0 + q.q2());
}

DiagonalObservable Scaled(double scale, std::array<double, 4> w) {
  for (double& v : w) v *= scale;
  return {w};
}

}  // namespace

ProbabilityMap ToProbabilities(const QuantityPair& q) {
  return {1.0 / (1.0 + q.q1()), 1.0 / (1.0 + q.q2())};
}

OperatorVariant OperatorVariant::General(
    const GeneralCoefficients& coefficients) {
  for (double v : coefficients.player1) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite coefficient");
  }
  for (double v : coefficients.player2) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite coefficient");
  }
  OperatorVariant variant(OperatorKind::kGeneral);
  variant.coefficients_ = coefficients;
  return variant;
}

TwoQubitState FinalState(const QuantityPair& q, const TwoQubitState& rho_in) {
  const ProbabilityMap p = ToProbabilities(q);
  return quantum::CorrelatedFlipMixture(rho_in, p.x, p.y);
}

DiagonalObservable PayoffOperator(const OperatorVariant& variant,
                                  Player player, const QuantityPair& q,
                                  const MarketParams& params) {
  const double norm = Normalizer(q);
  const double qi = q.Get(player);
  const double m = params.margin();
  switch (variant.kind()) {
    case OperatorKind::kM:
      return Scaled(norm * qi, {m, -1.0, -1.0, 0.0});
    case OperatorKind::kMPrime:
      if (q.Total() <= params.a()) {
        return Scaled(norm * qi, {m, -1.0, -1.0, 0.0});
      }
      return Scaled(norm * qi, {-params.c(), 0.0, 0.0, 0.0});
    case OperatorKind::kMDoublePrime:
      if (player == Player::kFirst) {
        return Scaled(norm, {m * qi, 0.0, -qi, -1.0});
      }
      return Scaled(norm, {m * qi, -qi, 0.0, -1.0});
    case OperatorKind::kGeneral:
      return Scaled(norm, player == Player::kFirst
                              ? variant.coefficients().player1
                              : variant.coefficients().player2);
  }
  throw std::logic_error("unknown operator kind");
}

double Payoff(Player player, const QuantityPair& q,
              const TwoQubitState& rho_in, const OperatorVariant& variant,
              const MarketParams& params) {
  return quantum::Expectation(FinalState(q, rho_in),
                              PayoffOperator(variant, player, q, params));
}

double RefinedPayoff(Player player, const QuantityPair& q,
                     const TwoQubitState& rho_in, const MarketParams& params) {
  return Payoff(player, q, rho_in, OperatorVariant::MPrime(), params);
}

eq::PayoffPair Game(const TwoQubitState& rho_in, const OperatorVariant& variant,
                    const MarketParams& params) {
  return {
      [=](double s1, double s2) {
        return Payoff(Player::kFirst, {s1, s2}, rho_in, variant, params);
      },
      [=](double s1, double s2) {
        return Payoff(Player::kSecond, {s1, s2}, rho_in, variant, params);
      },
  };
}

double HalfEquilibriumThreshold(double c) {
  return (c + std::sqrt(c * c + 16.0)) / 2.0;
}

HalfEquilibriumReport CheckHalfEquilibrium(const MarketParams& params,
                                           const eq::GridSpec& grid) {
  if (!(params.c() > 0.0)) {
    throw std::invalid_argument("half-a equilibrium check requires c > 0");
  }
  HalfEquilibriumReport out;
  out.threshold = HalfEquilibriumThreshold(params.c());
  out.condition_holds = params.a() >= out.threshold;
  const eq::PayoffPair game =
      Game(quantum::BasisState(1, 1), OperatorVariant::MPrime(), params);
  const StrategyProfile profile{params.a() / 2.0, params.a() / 2.0};
  out.payoffs = game.Evaluate(profile);
  out.report = eq::EpsNashVerify(game, profile, grid,
                                 eq::LipschitzEps(params.Lipschitz(), grid));
  return out;
}

TrivialOperatorSolution SolveTrivialOperator(const QuantityPair& q,
                                             Player player,
                                             const MarketParams& params) {
  // Row k: diagonal of the final state for initial basis state k, scaled by
  // (1+q1)(1+q2), so that row . x equals tr(rho_fin M) for the general M.
  const double norm = Normalizer(q);
  Eigen::Matrix4d system;
  for (int k = 0; k < 4; ++k) {
    const TwoQubitState fin = FinalState(q, quantum::BasisState(k / 2, k % 2));
    system.row(k) = norm * fin.Diagonal().transpose();
  }
  const double target = q.Get(player) * (params.margin() - q.Total());
  const Eigen::Vector4d rhs = Eigen::Vector4d::Constant(target);

  TrivialOperatorSolution out;
  out.expected = target / norm;
  Eigen::FullPivLU<Eigen::Matrix4d> lu(system);
  lu.setThreshold(1e-10);
  out.rank = static_cast<int>(lu.rank());
  out.nullity = 4 - out.rank;
  out.singular = out.rank < 4;
  if (!out.singular) {
    const Eigen::Vector4d x = lu.solve(rhs);
    out.coefficients = std::array<double, 4>{x(0), x(1), x(2), x(3)};
  }
  return out;
}

QuantityPair UnboundednessWitness(const MarketParams& params, double target) {
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw std::invalid_argument("witness target must be positive and finite");
  }
  const TwoQubitState rho_in = quantum::BasisState(1, 1);
  double t = 1.0;
  for (int k = 0; k < kMaxDoublings; ++k, t *= 2.0) {
    const QuantityPair q(t, t);
    if (Payoff(Player::kFirst, q, rho_in, OperatorVariant::M(), params) >
        target) {
      return q;
    }
  }
  throw std::runtime_error("unboundedness witness search did not terminate");
}

PayoffValues BertrandQuantumPayoffs(double p1, double p2, double gamma,
                                    const BertrandParams& params) {
  if (!(p1 >= 0.0) || !(p2 >= 0.0)) {
    throw std::invalid_argument("prices must be nonnegative");
  }
  const double a = params.a(), b = params.b(), c = params.c();
  const double cos2 = std::cos(gamma) * std::cos(gamma);
  const double sin2 = std::sin(gamma) * std::sin(gamma);
  const double u1 = (a - p1 + b * p2) *
                    ((p1 - c) * cos2 + (p2 + p1 * (-1.0 - c * p2 + p2 * p2)) * sin2);
  const double u2 = (a - p2 + b * p1) *
                    ((p2 - c) * cos2 + (p1 + p2 * (-1.0 - c * p1 + p1 * p1)) * sin2);
  return {u1, u2};
}

double BertrandDivergenceWitness(const BertrandParams& params, double target) {
  if (!std::isfinite(target)) {
    throw std::invalid_argument("witness target must be finite");
  }
  const double half_pi = std::acos(0.0);
  double p2 = 1.0;
  for (int k = 0; k < kMaxDoublings; ++k, p2 *= 2.0) {
    if (BertrandQuantumPayoffs(0.0, p2, half_pi, params).Sum() > target) {
      return p2;
    }
  }
  throw std::runtime_error("divergence witness search did not terminate");
}

HullReport ConvexHullViolationCheck(const MarketParams& params, int j1,
                                    int j2) {
  if (!(params.c() > 0.0)) {
    throw std::invalid_argument("hull check requires c > 0");
  }
  HullReport out;
  out.classical_joint_max = params.margin() * params.margin() / 4.0;
  const double limit =
      out.classical_joint_max + 1e-9 * std::max(1.0, out.classical_joint_max);
  const eq::PayoffPair game =
      Game(quantum::BasisState(j1, j2), OperatorVariant::M(), params);

  auto consider = [&](double q1, double q2) {
    const PayoffValues v = game.Evaluate({q1, q2});
    if (v.Sum() > limit && !out.violated) {
      out.violated = true;
      out.witness = QuantityPair(q1, q2);
      out.witness_payoffs = v;
    }
  };
  double t = 1.0;
  for (int k = 0; k < kHullSearchDoublings && !out.violated; ++k, t *= 2.0) {
    consider(t, t);
  }
  const eq::GridSpec grid(params.a(), kHullScanPoints);
  for (int i = 0; i < grid.n() && !out.violated; ++i) {
    for (int j = 0; j < grid.n() && !out.violated; ++j) {
      consider(grid.Point(i), grid.Point(j));
    }
  }
  if (j1 == 1 && j2 == 1 &&
      params.a() >= HalfEquilibriumThreshold(params.c())) {
    const double h = params.a() / 2.0;
    out.half_equilibrium_payoff =
        RefinedPayoff(Player::kFirst, {h, h}, quantum::BasisState(1, 1), params);
  }
  return out;
}

}  // namespace mw
}  // namespace qduopoly
