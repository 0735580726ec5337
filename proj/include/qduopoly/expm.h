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

#ifndef QDUOPOLY_EXPM_H_
#define QDUOPOLY_EXPM_H_

#include <Eigen/Dense>

namespace qduopoly {
namespace linalg {

// exp(A) for a small dense square matrix by scaling and squaring: A is scaled
// by 2^-s until its 1-norm is at most 1/2, the exponential of the scaled
// matrix is summed as a Taylor series to machine precision, and the result is
// squared s times.
Eigen::MatrixXd Expm(const Eigen::MatrixXd& a);

}  // namespace linalg
}  // namespace qduopoly

#endif  // QDUOPOLY_EXPM_H_
