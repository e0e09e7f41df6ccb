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

#ifndef PARLAB_SIMD_KERNELS_H_
#define PARLAB_SIMD_KERNELS_H_

#include <cstddef>
#include <string_view>

namespace parlab::simd {

enum class Isa { kScalar, kAvx2 };

// Instruction set used by the dispatching entry points. Chosen on first use
// from the CPU, unless PARLAB_ISA=scalar is set in the environment.
Isa ActiveIsa();
// Overrides the dispatch choice. Requesting kAvx2 on a CPU without AVX2 and
// FMA falls back to kScalar. Returns the ISA actually selected.
Isa ForceIsa(Isa isa);
bool CpuHasAvx2();
std::string_view IsaName(Isa isa);

// Kernel table. Every entry has a scalar reference and an AVX2 variant; the
// two differ only in summation order.
struct KernelTable {
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // out[i] = <rows[i, :], v> for a row-major n_rows x dim block.
  void (*row_dots)(const double* rows, std::size_t n_rows, std::size_t dim,
                   const double* v, double* out);
  // out = sum_i w[i] * rows[i, :]. `out` is overwritten.
  void (*weighted_row_sum)(const double* rows, std::size_t n_rows,
                           std::size_t dim, const double* w, double* out);
  // max_i { -2 alpha ||y_i||^{1+alpha} + 2 (1+alpha) <y_i, x> / ||y_i||^{1-alpha} }
  // over rows with keep[i] != 0, where norms[i] = ||y_i||. Returns -inf when
  // no row is kept.
  double (*tangent_max)(const double* rows, const double* norms,
                        const unsigned char* keep, std::size_t n_rows,
                        std::size_t dim, const double* x, double alpha,
                        std::size_t* argmax);
};

const KernelTable& ScalarKernels();
const KernelTable& Avx2Kernels();
const KernelTable& Kernels();  // the active table

inline double Dot(const double* a, const double* b, std::size_t n) {
  return Kernels().dot(a, b, n);
}
inline void Axpy(double a, const double* x, double* y, std::size_t n) {
  Kernels().axpy(a, x, y, n);
}
inline void RowDots(const double* rows, std::size_t n_rows, std::size_t dim,
                    const double* v, double* out) {
  Kernels().row_dots(rows, n_rows, dim, v, out);
}
inline void WeightedRowSum(const double* rows, std::size_t n_rows,
                           std::size_t dim, const double* w, double* out) {
  Kernels().weighted_row_sum(rows, n_rows, dim, w, out);
}

}  // namespace parlab::simd

#endif  // PARLAB_SIMD_KERNELS_H_
