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

#include <cstddef>
#include <limits>

#include "kernels_internal.h"

namespace parlab::simd::internal {
namespace {

double DotScalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void AxpyScalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void RowDotsScalar(const double* rows, std::size_t n_rows, std::size_t dim,
                   const double* v, double* out) {
  for (std::size_t i = 0; i < n_rows; ++i) {
    out[i] = DotScalar(rows + i * dim, v, dim);
  }
}

void WeightedRowSumScalar(const double* rows, std::size_t n_rows,
                          std::size_t dim, const double* w, double* out) {
  for (std::size_t j = 0; j < dim; ++j) out[j] = 0.0;
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (w[i] == 0.0) continue;
    AxpyScalar(w[i], rows + i * dim, out, dim);
  }
}

double TangentMaxScalar(const double* rows, const double* norms,
                        const unsigned char* keep, std::size_t n_rows,
                        std::size_t dim, const double* x, double alpha,
                        std::size_t* argmax) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = n_rows;
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (!keep[i]) continue;
    const double val =
        TangentValue(DotScalar(rows + i * dim, x, dim), norms[i], alpha);
    if (val > best) {
      best = val;
      best_i = i;
    }
  }
  if (argmax != nullptr) *argmax = best_i;
  return best;
}

}  // namespace

KernelTable MakeScalarTable() {
  return KernelTable{&DotScalar, &AxpyScalar, &RowDotsScalar,
                     &WeightedRowSumScalar, &TangentMaxScalar};
}

}  // namespace parlab::simd::internal
