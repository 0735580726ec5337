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

// Truncated two-mode Fock simulation of the entangled-field quantity map.
//
// The two-mode state is stored as an N x N matrix psi(n1, n2) of real
// amplitudes: every operator involved (ladder operators, the squeezing and
// displacement generators, the vacuum) is real in the number basis.

#include <algorithm>
#include <cmath>
#include <vector>

#include "qduopoly/expm.h"
#include "qduopoly/scheme_ldm.h"

namespace qduopoly {
namespace ldm {
namespace {

using Eigen::MatrixXd;

// Annihilation operator a on span{|0>, ..., |N-1>}: a|n> = sqrt(n)|n-1>.
MatrixXd Annihilation(int n) {
  MatrixXd a = MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

// Mass on the top two levels of either mode.
double TailMass(const MatrixXd& psi) {
  const int n = static_cast<int>(psi.rows());
  const int first_tail = std::max(0, n - 2);
  double mass = 0.0;
  for (int n1 = 0; n1 < n; ++n1) {
    for (int n2 = 0; n2 < n; ++n2) {
      if (n1 >= first_tail || n2 >= first_tail) mass += psi(n1, n2) * psi(n1, n2);
    }
  }
  return mass;
}

// Applies exp(sign * gamma * (a1^dag a2^dag - a1 a2)) to psi. The generator
// preserves n1 - n2, so it is exponentiated block by block along each chain
// (n2 + d, n2).
MatrixXd ApplySqueeze(const MatrixXd& psi, double gamma, double sign) {
  const int n = static_cast<int>(psi.rows());
  MatrixXd out = MatrixXd::Zero(n, n);
  for (int d = -(n - 1); d <= n - 1; ++d) {
    std::vector<std::pair<int, int>> chain;
    for (int n2 = std::max(0, -d); n2 < n && n2 + d < n; ++n2) {
      chain.emplace_back(n2 + d, n2);
    }
    const int m = static_cast<int>(chain.size());
    MatrixXd generator = MatrixXd::Zero(m, m);
    for (int k = 0; k + 1 < m; ++k) {
      // <k+1| a1^dag a2^dag |k> = sqrt((n1 + 1)(n2 + 1)).
      const double amp = std::sqrt(static_cast<double>(chain[k].first + 1) *
                                   (chain[k].second + 1));
      generator(k + 1, k) = amp;
      generator(k, k + 1) = -amp;
    }
    const MatrixXd block = linalg::Expm(sign * gamma * generator);
    Eigen::VectorXd v(m);
    for (int k = 0; k < m; ++k) v(k) = psi(chain[k].first, chain[k].second);
    const Eigen::VectorXd w = block * v;
    for (int k = 0; k < m; ++k) out(chain[k].first, chain[k].second) = w(k);
  }
  return out;
}

}  // namespace

FockReport FockVerifyQuantityMap(const LdmStrategy& s, const FockConfig& cfg) {
  const int n = cfg.cutoff();
  const MatrixXd a = Annihilation(n);
  const MatrixXd adag = a.transpose();

  MatrixXd psi = MatrixXd::Zero(n, n);
  psi(0, 0) = 1.0;
  double tail = 0.0;

  // J(gamma) = exp(-gamma (a1^dag a2^dag - a1 a2)).
  psi = ApplySqueeze(psi, s.gamma(), -1.0);
  tail = std::max(tail, TailMass(psi));

  // D_i(x_i) = exp(x_i (a_i^dag - a_i) / sqrt(2)); mode 1 acts on rows.
  const MatrixXd displacement_generator = (adag - a) / std::sqrt(2.0);
  const MatrixXd d1 = linalg::Expm(s.x1() * displacement_generator);
  const MatrixXd d2 = linalg::Expm(s.x2() * displacement_generator);
  psi = d1 * psi * d2.transpose();
  tail = std::max(tail, TailMass(psi));

  // J(gamma)^dagger = exp(+gamma (a1^dag a2^dag - a1 a2)).
  psi = ApplySqueeze(psi, s.gamma(), +1.0);
  tail = std::max(tail, TailMass(psi));

  // X = (a^dag + a) / sqrt(2) on each mode.
  const MatrixXd x_op = (adag + a) / std::sqrt(2.0);
  FockReport report;
  report.q1 = (psi.cwiseProduct(x_op * psi)).sum();
  report.q2 = (psi.cwiseProduct(psi * x_op.transpose())).sum();
  report.tail_mass = tail;
  // |<psi|X|delta>| <= ||X|| ||delta|| with ||X|| <= sqrt(2N) on the
  // truncated space and ||delta|| ~ sqrt(tail) for the truncation defect.
  report.accuracy_bound =
      2.0 * std::sqrt(2.0 * n) * std::sqrt(tail) + 1e-12;
  report.tail_ok = tail < kFockTailLimit;
  return report;
}

}  // namespace ldm
}  // namespace qduopoly
