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

#include "qduopoly/eq_solver.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qduopoly {
namespace eq {
namespace {

constexpr double kTieRelTol = 1e-12;
constexpr int kTrajectoryTail = 8;

bool Improves(double candidate, double best) {
  return candidate > best + kTieRelTol * std::max(1.0, std::abs(best));
}

double Evaluate(const PayoffFn& u, Player player, double own, double other) {
  return player == Player::kFirst ? u(own, other) : u(other, own);
}

// Maximum of the player's payoff over its own grid axis.
double GridMaxValue(const PayoffFn& u, Player player, double opponent_value,
                    const GridSpec& grid) {
  double best = Evaluate(u, player, grid.Point(0), opponent_value);
  for (int j = 1; j < grid.n(); ++j) {
    best = std::max(best, Evaluate(u, player, grid.Point(j), opponent_value));
  }
  return best;
}

}  // namespace

GridSpec::GridSpec(double xmax, int n) : xmax_(xmax), n_(n) {
  if (!(xmax > 0.0) || !std::isfinite(xmax)) {
    throw std::invalid_argument("grid: xmax > 0 violated");
  }
  if (n < 2) throw std::invalid_argument("grid: n >= 2 violated");
}

double GridSpec::Point(int j) const {
  if (j == n_ - 1) return xmax_;
  return j * xmax_ / (n_ - 1);
}

int GridSpec::NearestIndex(double value) const {
  const double idx = std::round(value / step());
  return static_cast<int>(std::clamp(idx, 0.0, static_cast<double>(n_ - 1)));
}

double QuadraticEps(double curvature, const GridSpec& grid, double factor) {
  const double h = grid.step();
  return factor * curvature * h * h / 4.0;
}

double GridBestResponse(const PayoffFn& u, Player player, double opponent_value,
                        const GridSpec& grid) {
  int best_j = 0;
  double best = Evaluate(u, player, grid.Point(0), opponent_value);
  for (int j = 1; j < grid.n(); ++j) {
    const double v = Evaluate(u, player, grid.Point(j), opponent_value);
    if (Improves(v, best)) {
      best = v;
      best_j = j;
    }
  }
  return grid.Point(best_j);
}

EpsNashReport EpsNashVerify(const PayoffPair& u, const StrategyProfile& profile,
                            const GridSpec& grid, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps > 0 violated");
  EpsNashReport report;
  report.profile = profile;
  report.eps = eps;
  const PayoffValues current = u.Evaluate(profile);
  report.max_gain_1 = std::max(
      0.0, GridMaxValue(u.u1, Player::kFirst, profile.s2, grid) - current.u1);
  report.max_gain_2 = std::max(
      0.0, GridMaxValue(u.u2, Player::kSecond, profile.s1, grid) - current.u2);
  report.certified = report.max_gain_1 <= eps && report.max_gain_2 <= eps;
  return report;
}

IterationResult BestResponseIteration(const PayoffPair& u,
                                      const StrategyProfile& init,
                                      const GridSpec& grid, int max_iters,
                                      double tol) {
  if (max_iters < 1) throw std::invalid_argument("max_iters >= 1 violated");
  IterationResult result;
  StrategyProfile current = init;
  std::vector<StrategyProfile> trajectory{current};
  for (int it = 1; it <= max_iters; ++it) {
    StrategyProfile next;
    next.s1 = GridBestResponse(u.u1, Player::kFirst, current.s2, grid);
    next.s2 = GridBestResponse(u.u2, Player::kSecond, next.s1, grid);
    const bool settled = std::abs(next.s1 - current.s1) <= tol &&
                         std::abs(next.s2 - current.s2) <= tol;
    current = next;
    trajectory.push_back(current);
    result.iterations = it;
    if (settled) {
      result.converged = true;
      break;
    }
  }
  result.profile = current;
  if (!result.converged) {
    const auto tail = std::min<std::size_t>(trajectory.size(), kTrajectoryTail);
    result.trajectory_tail.assign(trajectory.end() - tail, trajectory.end());
  }
  return result;
}

std::vector<StrategyProfile> BruteForceEquilibria(const PayoffPair& u,
                                                  const GridSpec& grid,
                                                  double eps) {
  const int n = grid.n();
  std::vector<double> pts(n);
  for (int j = 0; j < n; ++j) pts[j] = grid.Point(j);

  // Row-major payoff tables indexed [i * n + j] for profile (pts[i], pts[j]).
  std::vector<double> u1(static_cast<std::size_t>(n) * n);
  std::vector<double> u2(u1.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u1[i * n + j] = u.u1(pts[i], pts[j]);
      u2[i * n + j] = u.u2(pts[i], pts[j]);
    }
  }
  // Player 1 best value against column j; player 2 best value against row i.
  std::vector<double> best1(n, -HUGE_VAL), best2(n, -HUGE_VAL);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      best1[j] = std::max(best1[j], u1[i * n + j]);
      best2[i] = std::max(best2[i], u2[i * n + j]);
    }
  }
  std::vector<StrategyProfile> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (best1[j] - u1[i * n + j] <= eps && best2[i] - u2[i * n + j] <= eps) {
        out.push_back({pts[i], pts[j]});
      }
    }
  }
  return out;
}

ParetoScan ParetoScanGrid(const PayoffPair& u, const GridSpec& grid,
                          double eps) {
  const int n = grid.n();
  std::vector<double> sums(static_cast<std::size_t>(n) * n);
  ParetoScan scan;
  scan.max_sum = -HUGE_VAL;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = grid.Point(i), y = grid.Point(j);
      const double s = u.u1(x, y) + u.u2(x, y);
      sums[i * n + j] = s;
      scan.max_sum = std::max(scan.max_sum, s);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (sums[i * n + j] >= scan.max_sum - eps) {
        scan.argmax.push_back({grid.Point(i), grid.Point(j)});
      }
    }
  }
  return scan;
}

bool EquilibriumResult::certified() const {
  if (certification.empty()) return false;
  return std::all_of(certification.begin(), certification.end(),
                     [](const EpsNashReport& r) { return r.certified; });
}

std::vector<StrategyProfile> EquilibriumResult::SampleSegment(int count) const {
  if (count < 2) throw std::invalid_argument("segment sample count >= 2");
  std::vector<StrategyProfile> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / (count - 1);
    out.push_back({segment_begin.s1 + t * (segment_end.s1 - segment_begin.s1),
                   segment_begin.s2 + t * (segment_end.s2 - segment_begin.s2)});
  }
  return out;
}

void AddRepresentative(EquilibriumResult& result, const PayoffPair& u,
                       const StrategyProfile& profile, const GridSpec& grid,
                       double eps) {
  result.representatives.push_back(profile);
  result.payoffs.push_back(u.Evaluate(profile));
  result.certification.push_back(EpsNashVerify(u, profile, grid, eps));
}

}  // namespace eq
}  // namespace qduopoly
