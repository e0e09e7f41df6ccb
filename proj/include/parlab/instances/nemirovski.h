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

#ifndef PARLAB_INSTANCES_NEMIROVSKI_H_
#define PARLAB_INSTANCES_NEMIROVSKI_H_

#include <cstddef>
#include <vector>

#include "parlab/core/types.h"

namespace parlab {

struct NemirovskiParams {
  std::vector<Vec> vectors;  // orthonormal v_1..v_N
  double gamma = 0.0;
};

struct NemirovskiResult {
  double value = 0.0;
  Vec subgradient;
  std::size_t argmax_index = 0;  // 1-based, smallest maximizing index
};

// max_i { <v_i, x> - i * gamma }.
NemirovskiResult NemirovskiEval(const NemirovskiParams& params, VecView x);

// -(1 / sqrt(N)) * sum_i v_i, the point whose value certifies the optimum
// upper bound -1/sqrt(N) when gamma = 0.
Vec NemirovskiReferencePoint(const NemirovskiParams& params);

}  // namespace parlab

#endif  // PARLAB_INSTANCES_NEMIROVSKI_H_
