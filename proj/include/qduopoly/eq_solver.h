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

#ifndef QDUOPOLY_EQ_SOLVER_H_
#define QDUOPOLY_EQ_SOLVER_H_

#include <functional>
#include <vector>

// Scheme-agnostic numerical oracle for two-player games with continuous
// strategy sets. Strategies are searched on a truncated box [0, xmax] sampled
// uniformly; every scheme module hands its payoffs over as a PayoffPair.
//
// All scans are deterministic: ties are broken toward the smallest strategy
// value (lowest grid index).

namespace qduopoly {

enum class Player { kFirst, kSecond };

inline Player Opponent(Player p) {
  return p == Player::kFirst ? Player::kSecond : Player::kFirst;
}

// A pair of nonnegative strategy values: quantities, prices or pre-image
// strategies depending on the scheme.
struct StrategyProfile {
  double s1 = 0.0;
  double s2 = 0.0;

  double Get(Player p) const { return p == Player::kFirst ? s1 : s2; }
};

struct PayoffValues {
  double u1 = 0.0;
  double u2 = 0.0;

  double Get(Player p) const { return p == Player::kFirst ? u1 : u2; }
  double Sum() const { return u1 + u2; }
};

namespace eq {

// Uniform grid j * xmax / (n - 1), j = 0..n-1. Throws std::invalid_argument
// unless xmax > 0 and n >= 2.
class GridSpec {
 public:
  GridSpec(double xmax, int n);

  double xmax() const { return xmax_; }
  int n() const { return n_; }
  double step() const { return xmax_ / (n_ - 1); }
  double Point(int j) const;
  // Index of the grid point nearest to `value`, clamped to the box.
  int NearestIndex(double value) const;

 private:
  double xmax_;
  int n_;
};

// Payoff of one player as a function of (s1, s2). Must be total on the
// nonnegative quadrant and deterministic.
using PayoffFn = std::function<double(double s1, double s2)>;

struct PayoffPair {
  PayoffFn u1;
  PayoffFn u2;

  const PayoffFn& Get(Player p) const { return p == Player::kFirst ? u1 : u2; }
  PayoffValues Evaluate(const StrategyProfile& s) const {
    return {u1(s.s1, s.s2), u2(s.s1, s.s2)};
  }
};

struct EpsNashReport {
  StrategyProfile profile;
  double max_gain_1 = 0.0;  // best unilateral improvement found, floored at 0
  double max_gain_2 = 0.0;
  double eps = 0.0;
  bool certified = false;
};

// Default certification tolerance L * h with Lipschitz bound L supplied by the
// caller (schemes use L = 2(a + c)).
inline double LipschitzEps(double lipschitz, const GridSpec& grid) {
  return lipschitz * grid.step();
}

// Tolerance for uniqueness scans of payoffs that are locally quadratic in the
// deviating player's own strategy, u(s + d) ~ u(s) - curvature * d^2. The
// best grid response then loses at most curvature * h^2 / 4 against the true
// best response, and `factor` scales that bound.
double QuadraticEps(double curvature, const GridSpec& grid,
                    double factor = 1.0);

// Grid point maximizing `u` for `player` with the opponent fixed at
// `opponent_value`. Values within 1e-12 relative of the running best are
// treated as ties and resolved toward the smaller strategy.
double GridBestResponse(const PayoffFn& u, Player player, double opponent_value,
                        const GridSpec& grid);

EpsNashReport EpsNashVerify(const PayoffPair& u, const StrategyProfile& profile,
                            const GridSpec& grid, double eps);

struct IterationResult {
  bool converged = false;
  int iterations = 0;
  StrategyProfile profile;
  // Last few profiles visited, oldest first; populated on nonconvergence.
  std::vector<StrategyProfile> trajectory_tail;
};

// Alternating (Gauss-Seidel) grid best responses starting from `init`.
// Converged once neither coordinate moves by more than `tol`.
IterationResult BestResponseIteration(const PayoffPair& u,
                                      const StrategyProfile& init,
                                      const GridSpec& grid, int max_iters,
                                      double tol);

// Every grid profile that passes the eps-Nash test, in lexicographic order.
// Costs n^2 evaluations per player; row/column maxima are precomputed.
std::vector<StrategyProfile> BruteForceEquilibria(const PayoffPair& u,
                                                  const GridSpec& grid,
                                                  double eps);

struct ParetoScan {
  double max_sum = 0.0;
  std::vector<StrategyProfile> argmax;  // lexicographic order
};

// Maximum of u1 + u2 over the grid and every grid point within `eps` of it.
ParetoScan ParetoScanGrid(const PayoffPair& u, const GridSpec& grid,
                          double eps);

enum class EquilibriumKind { kPoint, kSegment, kRegion, kEmpty };

// Unbounded equilibrium region {s1 >= lower1, s2 >= lower2}.
struct RegionDescriptor {
  double lower1 = 0.0;
  double lower2 = 0.0;

  bool Contains(const StrategyProfile& s) const {
    return s.s1 >= lower1 && s.s2 >= lower2;
  }
};

struct EquilibriumResult {
  EquilibriumKind kind = EquilibriumKind::kEmpty;
  StrategyProfile point;          // kPoint
  StrategyProfile segment_begin;  // kSegment
  StrategyProfile segment_end;    // kSegment
  RegionDescriptor region;        // kRegion

  // Profiles that were evaluated and certified; parallel vectors.
  std::vector<StrategyProfile> representatives;
  std::vector<PayoffValues> payoffs;
  std::vector<EpsNashReport> certification;

  bool unique() const { return kind == EquilibriumKind::kPoint; }
  bool certified() const;
  // `count` >= 2 evenly spaced profiles from segment_begin to segment_end.
  std::vector<StrategyProfile> SampleSegment(int count) const;
};

// Appends `profile` to `result` with its payoffs and an eps-Nash certificate.
void AddRepresentative(EquilibriumResult& result, const PayoffPair& u,
                       const StrategyProfile& profile, const GridSpec& grid,
                       double eps);

}  // namespace eq
}  // namespace qduopoly

#endif  // QDUOPOLY_EQ_SOLVER_H_
