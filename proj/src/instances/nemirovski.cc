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

#include "parlab/instances/nemirovski.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "parlab/core/linalg.h"

namespace parlab {

NemirovskiResult NemirovskiEval(const NemirovskiParams& params, VecView x) {
  NemirovskiResult out;
  out.value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < params.vectors.size(); ++i) {
    const Vec& v = params.vectors[i];
    if (v.size() != x.size()) throw std::invalid_argument("dimension mismatch");
    const double val = Dot(v, x) - static_cast<double>(i + 1) * params.gamma;
    if (val > out.value) {
      out.value = val;
      out.argmax_index = i + 1;
    }
  }
  if (out.argmax_index == 0) throw std::invalid_argument("no vectors");
  out.subgradient = params.vectors[out.argmax_index - 1];
  return out;
}

Vec NemirovskiReferencePoint(const NemirovskiParams& params) {
  Vec x(params.vectors.front().size(), 0.0);
  const double s = -1.0 / std::sqrt(static_cast<double>(params.vectors.size()));
  for (const Vec& v : params.vectors) Axpy(s, v, x);
  return x;
}

}  // namespace parlab
