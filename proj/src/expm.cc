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

#include "qduopoly/expm.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qduopoly {
namespace linalg {
namespace {

constexpr double kScaledNormCap = 0.5;
constexpr int kMaxTerms = 30;

double OneNorm(const Eigen::MatrixXd& a) {
  return a.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace

Eigen::MatrixXd Expm(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("Expm: not square");
  if (!a.allFinite()) throw std::invalid_argument("Expm: non-finite input");
  const Eigen::Index n = a.rows();
  if (n == 0) return a;

  const double norm = OneNorm(a);
  int squarings = 0;
  if (norm > kScaledNormCap) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / kScaledNormCap)));
  }
  const Eigen::MatrixXd scaled = a / std::ldexp(1.0, squarings);

  // ||scaled|| <= 1/2, so terms shrink at least geometrically by half.
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= kMaxTerms; ++k) {
    term = (term * scaled) / static_cast<double>(k);
    result += term;
    if (OneNorm(term) <= std::numeric_limits<double>::epsilon() *
                             OneNorm(result)) {
      break;
    }
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace linalg
}  // namespace qduopoly
