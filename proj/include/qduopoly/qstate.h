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

#ifndef QDUOPOLY_QSTATE_H_
#define QDUOPOLY_QSTATE_H_

#include <array>
#include <complex>

#include <Eigen/Dense>

// Two-qubit density operators on C^2 (x) C^2. Basis |j1 j2> maps to row/column
// index 2 * j1 + j2, so the order is |00>, |01>, |10>, |11>.

namespace qduopoly {
namespace quantum {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kEigenFloor = -1e-10;

enum class Qubit { kFirst, kSecond };

inline int BasisIndex(int j1, int j2) { return 2 * j1 + j2; }

// Hermitian, unit-trace, positive semidefinite 4x4 matrix. Construction
// validates; every instance satisfies the invariants.
class TwoQubitState {
 public:
  explicit TwoQubitState(const Eigen::Matrix4cd& rho);

  const Eigen::Matrix4cd& matrix() const { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }
  Eigen::Vector4d Diagonal() const { return rho_.diagonal().real(); }

 private:
  Eigen::Matrix4cd rho_;
};

class SingleQubitState {
 public:
  explicit SingleQubitState(const Eigen::Matrix2cd& rho);

  const Eigen::Matrix2cd& matrix() const { return rho_; }
  Complex operator()(int row, int col) const { return rho_(row, col); }

 private:
  Eigen::Matrix2cd rho_;
};

// sum_{j1 j2} w_{j1 j2} |j1 j2><j1 j2|, weights in basis order.
struct DiagonalObservable {
  std::array<double, 4> weights{};
};

// w0 |0><0| + w1 |1><1|.
struct QubitObservable {
  std::array<double, 2> weights{};
};

TwoQubitState BasisState(int j1, int j2);

// |psi><psi| for a unit vector psi in basis order; throws if |psi| differs
// from 1 by more than 1e-12.
TwoQubitState PureState(const std::array<Complex, 4>& amplitudes);

// Player 1 applies identity with probability x and sigma_x otherwise; player
// 2 likewise with y. Returns the resulting mixture of conjugated states.
TwoQubitState CorrelatedFlipMixture(const TwoQubitState& rho, double x,
                                    double y);

double Expectation(const TwoQubitState& rho, const DiagonalObservable& obs);
double Expectation(const SingleQubitState& rho, const QubitObservable& obs);

SingleQubitState PartialTrace(const TwoQubitState& rho, Qubit keep);

}  // namespace quantum
}  // namespace qduopoly

#endif  // QDUOPOLY_QSTATE_H_
