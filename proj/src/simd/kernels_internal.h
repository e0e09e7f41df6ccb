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

#ifndef PARLAB_SRC_SIMD_KERNELS_INTERNAL_H_
#define PARLAB_SRC_SIMD_KERNELS_INTERNAL_H_

#include <cmath>

#include "parlab/simd/kernels.h"

namespace parlab::simd::internal {

KernelTable MakeScalarTable();
// Only call when CpuHasAvx2() is true.
KernelTable MakeAvx2Table();

// Internal linkage on purpose: the AVX2 translation unit is built with wider
// target flags and must not share an out-of-line copy with the scalar one.
static inline double TangentValue(double inner, double norm, double alpha) {
  const double pa = std::pow(norm, alpha);
  return -2.0 * alpha * pa * norm + 2.0 * (1.0 + alpha) * inner * pa / norm;
}

}  // namespace parlab::simd::internal

#endif  // PARLAB_SRC_SIMD_KERNELS_INTERNAL_H_
