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

#include "qduopoly/qstate.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qduopoly {
namespace quantum {
namespace {

template <typename Matrix>
void ValidateDensity(const Matrix& rho, const char* what) {
  if (!rho.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw std::invalid_argument(std::string(what) + ": not Hermitian");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr.real() - 1.0) > kTraceTol || std::abs(tr.imag()) > kTraceTol) {
    throw std::invalid_argument(std::string(what) + ": trace != 1");
  }
  // Symmetrize so the solver sees an exactly self-adjoint input.
  const Matrix herm = (rho + rho.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigenFloor) {
    throw std::invalid_argument(std::string(what) + ": not positive semidefinite");
  }
}

// sigma_x on one qubit permutes basis indices: flip j1 is index ^ 2, flip j2
// is index ^ 1.
Eigen::Matrix4cd ConjugateByFlip(const Eigen::Matrix4cd& rho, int mask) {
  Eigen::Matrix4cd out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out(r, c) = rho(r ^ mask, c ^ mask);
  }
  return out;
}

void RequireProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

TwoQubitState::TwoQubitState(const Eigen::Matrix4cd& rho) : rho_(rho) {
  ValidateDensity(rho_, "two-qubit state");
}

SingleQubitState::SingleQubitState(const Eigen::Matrix2cd& rho) : rho_(rho) {
  ValidateDensity(rho_, "single-qubit state");
}

TwoQubitState BasisState(int j1, int j2) {
  if ((j1 != 0 && j1 != 1) || (j2 != 0 && j2 != 1)) {
    throw std::invalid_argument("basis bits must be 0 or 1");
  }
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(BasisIndex(j1, j2), BasisIndex(j1, j2)) = 1.0;
  return TwoQubitState(rho);
}

TwoQubitState PureState(const std::array<Complex, 4>& amplitudes) {
  const Eigen::Vector4cd psi(amplitudes[0], amplitudes[1], amplitudes[2],
                             amplitudes[3]);
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("pure state amplitudes must have unit norm");
  }
  return TwoQubitState(psi * psi.adjoint());
}

TwoQubitState CorrelatedFlipMixture(const TwoQubitState& rho, double x,
                                    double y) {
  RequireProbability(x, "x");
  RequireProbability(y, "y");
  const Eigen::Matrix4cd& m = rho.matrix();
  const Eigen::Matrix4cd mixed = x * y * m +
                                 x * (1.0 - y) * ConjugateByFlip(m, 1) +
                                 (1.0 - x) * y * ConjugateByFlip(m, 2) +
                                 (1.0 - x) * (1.0 - y) * ConjugateByFlip(m, 3);
  return TwoQubitState(mixed);
}

double Expectation(const TwoQubitState& rho, const DiagonalObservable& obs) {
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) sum += obs.weights[k] * rho(k, k).real();
  return sum;
}

double Expectation(const SingleQubitState& rho, const QubitObservable& obs) {
  return obs.weights[0] * rho(0, 0).real() + obs.weights[1] * rho(1, 1).real();
}

SingleQubitState PartialTrace(const TwoQubitState& rho, Qubit keep) {
  Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      for (int k = 0; k < 2; ++k) {
        out(r, c) += keep == Qubit::kFirst
                         ? rho(BasisIndex(r, k), BasisIndex(c, k))
                         : rho(BasisIndex(k, r), BasisIndex(k, c));
      }
    }
  }
  return SingleQubitState(out);
}

}  // namespace quantum
}  // namespace qduopoly
