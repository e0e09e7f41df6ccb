// Copyright 2026 The Parlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARLAB_CORE_LINALG_H_
#define PARLAB_CORE_LINALG_H_

#include <vector>

#include "parlab/core/rng.h"
#include "parlab/core/types.h"

namespace parlab {

double Dot(VecView a, VecView b);
double Norm(VecView a);
double Distance(VecView a, VecView b);
// y += a * x
void Axpy(double a, VecView x, MutVecView y);
void Scale(double a, MutVecView x);
Vec Sub(VecView a, VecView b);
Vec Add(VecView a, VecView b);
// a * x + b * y
Vec Combine(double a, VecView x, double b, VecView y);
Vec Zeros(std::size_t d);

// Orthogonal projection of x onto span(basis). The rows must be orthonormal
// to within `tol`; otherwise ContractViolation is thrown.
Vec ProjectSpan(const std::vector<Vec>& basis, VecView x, double tol = 1e-10);

// x minus its projection onto span(basis).
Vec ProjectComplement(const std::vector<Vec>& basis, VecView x,
                      double tol = 1e-10);

// Largest |<b_i, b_j> - [i == j]| over the rows.
double OrthonormalityDefect(const std::vector<Vec>& basis);

// Draws `count` orthonormal vectors uniformly from the orthogonal complement
// of span(basis) in R^d. Gaussian draws whose residual after projection falls
// below 1e-8 are redrawn.
std::vector<Vec> OrthonormalComplementSample(const std::vector<Vec>& basis,
                                             std::size_t count, std::size_t d,
                                             RngStream& rng);

// Euclidean projection onto the ball of the given radius centred at 0.
void ProjectBall(MutVecView x, double radius);

}  // namespace parlab

#endif  // PARLAB_CORE_LINALG_H_
