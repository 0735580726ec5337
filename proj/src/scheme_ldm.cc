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

#include "qduopoly/scheme_ldm.h"

#include <cmath>
#include <stdexcept>

namespace qduopoly {
namespace ldm {
namespace {

constexpr int kCertificationPoints = 401;

void RequireGamma(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("gamma >= 0 violated");
  }
}

}  // namespace

LdmStrategy::LdmStrategy(double x1, double x2, double gamma)
    : x1_(x1), x2_(x2), gamma_(gamma) {
  if (!(x1 >= 0.0) || !(x2 >= 0.0)) {
    throw std::invalid_argument("strategies must be nonnegative");
  }
  RequireGamma(gamma);
}

QuantityPair QuantityMap(const LdmStrategy& s) {
  const double ch = std::cosh(s.gamma()), sh = std::sinh(s.gamma());
  return {s.x1() * ch + s.x2() * sh, s.x2() * ch + s.x1() * sh};
}

double Payoff(Player player, const LdmStrategy& s, const MarketParams& params,
              PayoffForm form) {
  const double qi = QuantityMap(s).Get(player);
  const double total = std::exp(s.gamma()) * (s.x1() + s.x2());
  if (form == PayoffForm::kRefined && total > params.a()) {
    return -params.c() * qi;
  }
  return qi * (params.margin() - total);
}

eq::PayoffPair Game(double gamma, const MarketParams& params, PayoffForm form) {
  RequireGamma(gamma);
  return {
      [=](double x1, double x2) {
        return Payoff(Player::kFirst, {x1, x2, gamma}, params, form);
      },
      [=](double x1, double x2) {
        return Payoff(Player::kSecond, {x1, x2, gamma}, params, form);
      },
  };
}

double StrategyBound(double gamma, const MarketParams& params) {
  RequireGamma(gamma);
  return params.a() * std::exp(-gamma);
}

double BestReply(Player /*player*/, double opponent, double gamma,
                 const MarketParams& params) {
  RequireGamma(gamma);
  if (!(params.c() > 0.0)) throw std::invalid_argument("best reply requires c > 0");
  if (!(opponent >= 0.0)) throw std::invalid_argument("opponent strategy < 0");
  const double e2g = std::exp(2.0 * gamma);
  const double ch = std::cosh(gamma);
  if (opponent > params.margin() * ch / e2g) return 0.0;
  return (params.margin() * ch - e2g * opponent) / (e2g + 1.0);
}

eq::EquilibriumResult Equilibrium(double gamma, const MarketParams& params) {
  const eq::PayoffPair game = Game(gamma, params, PayoffForm::kRefined);
  const double bound = StrategyBound(gamma, params);
  eq::EquilibriumResult result;
  if (params.c() > 0.0) {
    const double x = params.margin() * std::cosh(gamma) /
                     (1.0 + 2.0 * std::exp(2.0 * gamma));
    result.kind = eq::EquilibriumKind::kPoint;
    result.point = {x, x};
    const eq::GridSpec grid(bound, kCertificationPoints);
    eq::AddRepresentative(result, game, result.point, grid,
                          eq::LipschitzEps(params.Lipschitz(), grid));
  } else {
    result.kind = eq::EquilibriumKind::kRegion;
    result.region = {bound, bound};
    const eq::GridSpec grid(2.0 * bound, kCertificationPoints);
    eq::AddRepresentative(result, game, {bound, bound}, grid,
                          eq::LipschitzEps(params.Lipschitz(), grid));
  }
  return result;
}

ParetoOutcome ParetoSymmetricOptimum(double gamma, const MarketParams& params) {
  RequireGamma(gamma);
  ParetoOutcome out;
  out.line_sum = params.margin() * std::exp(-gamma) / 2.0;
  out.profile = {out.line_sum / 2.0, out.line_sum / 2.0};
  out.payoff = Payoff(Player::kFirst, {out.profile.s1, out.profile.s2, gamma},
                      params, PayoffForm::kRefined);
  return out;
}

FockConfig::FockConfig(int cutoff) : cutoff_(cutoff) {
  if (cutoff < 2) throw std::invalid_argument("cutoff >= 2 violated");
}

}  // namespace ldm
}  // namespace qduopoly
