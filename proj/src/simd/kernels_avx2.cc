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

#include <immintrin.h>

#include <cstddef>
#include <limits>

#include "kernels_internal.h"

namespace parlab::simd::internal {
namespace {

inline double HorizontalSum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d shuf = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

double DotAvx2(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4),
                           _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  }
  double s = HorizontalSum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void AxpyAvx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                            _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void RowDotsAvx2(const double* rows, std::size_t n_rows, std::size_t dim,
                 const double* v, double* out) {
  std::size_t i = 0;
  // Four rows at a time share each load of v.
  for (; i + 4 <= n_rows; i += 4) {
    const double* r0 = rows + i * dim;
    const double* r1 = r0 + dim;
    const double* r2 = r1 + dim;
    const double* r3 = r2 + dim;
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    __m256d a2 = _mm256_setzero_pd(), a3 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= dim; j += 4) {
      const __m256d vv = _mm256_loadu_pd(v + j);
      a0 = _mm256_fmadd_pd(_mm256_loadu_pd(r0 + j), vv, a0);
      a1 = _mm256_fmadd_pd(_mm256_loadu_pd(r1 + j), vv, a1);
      a2 = _mm256_fmadd_pd(_mm256_loadu_pd(r2 + j), vv, a2);
      a3 = _mm256_fmadd_pd(_mm256_loadu_pd(r3 + j), vv, a3);
    }
    double s0 = HorizontalSum(a0), s1 = HorizontalSum(a1);
    double s2 = HorizontalSum(a2), s3 = HorizontalSum(a3);
    for (; j < dim; ++j) {
      s0 += r0[j] * v[j];
      s1 += r1[j] * v[j];
      s2 += r2[j] * v[j];
      s3 += r3[j] * v[j];
    }
    out[i] = s0;
    out[i + 1] = s1;
    out[i + 2] = s2;
    out[i + 3] = s3;
  }
  for (; i < n_rows; ++i) out[i] = DotAvx2(rows + i * dim, v, dim);
}

void WeightedRowSumAvx2(const double* rows, std::size_t n_rows,
                        std::size_t dim, const double* w, double* out) {
  for (std::size_t j = 0; j < dim; ++j) out[j] = 0.0;
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (w[i] == 0.0) continue;
    AxpyAvx2(w[i], rows + i * dim, out, dim);
  }
}

double TangentMaxAvx2(const double* rows, const double* norms,
                      const unsigned char* keep, std::size_t n_rows,
                      std::size_t dim, const double* x, double alpha,
                      std::size_t* argmax) {
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_i = n_rows;
  for (std::size_t i = 0; i < n_rows; ++i) {
    if (!keep[i]) continue;
    const double val =
        TangentValue(DotAvx2(rows + i * dim, x, dim), norms[i], alpha);
    if (val > best) {
      best = val;
      best_i = i;
    }
  }
  if (argmax != nullptr) *argmax = best_i;
  return best;
}

}  // namespace

KernelTable MakeAvx2Table() {
  return KernelTable{&DotAvx2, &AxpyAvx2, &RowDotsAvx2, &WeightedRowSumAvx2,
                     &TangentMaxAvx2};
}

}  // namespace parlab::simd::internal
