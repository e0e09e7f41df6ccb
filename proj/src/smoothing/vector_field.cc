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

#include "parlab/smoothing/vector_field.h"

#include <cmath>
#include <sstream>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"
#include "parlab/simd/kernels.h"
#include "parlab/smoothing/plan.h"

namespace parlab {

SampledVectorField SampledVectorField::Sample(ParallelOracle& f,
                                              VecView center, double r,
                                              double eta,
                                              std::size_t sample_count,
                                              RngStream& rng) {
  const std::size_t d = center.size();
  SampledVectorField field;
  field.center_.assign(center.begin(), center.end());
  field.r_ = r;
  field.eta_ = eta;
  field.sample_count_ = sample_count;

  RowMatrix points(sample_count, d);
  RowMatrix offsets(sample_count, d);
  for (std::size_t i = 0; i < sample_count; ++i) {
    MutVecView off = offsets.row(i);
    rng.FillNormal(off);
    Scale(r, off);
    MutVecView pt = points.row(i);
    for (std::size_t j = 0; j < d; ++j) pt[j] = center[j] + off[j];
  }
  RowMatrix grads;
  f.SubmitBatchGradients(points, grads);

  const double cutoff = (std::sqrt(static_cast<double>(d)) + 1.0 / eta) * r;
  field.offsets_ = RowMatrix(0, d);
  field.gradients_ = RowMatrix(0, d);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < sample_count; ++i) {
    if (Norm(offsets.row(i)) > cutoff) continue;
    // Compact in place: row `kept` <- row i.
    if (kept != i) {
      std::copy(offsets.row(i).begin(), offsets.row(i).end(),
                offsets.row(kept).begin());
      std::copy(grads.row(i).begin(), grads.row(i).end(),
                grads.row(kept).begin());
    }
    ++kept;
  }
  offsets.resize_rows(kept);
  grads.resize_rows(kept);
  field.offsets_ = std::move(offsets);
  field.gradients_ = std::move(grads);
  return field;
}

Vec SampledVectorField::Eval(VecView y) const {
  Vec out(center_.size());
  Vec scratch(kept_count());
  EvalInto(y, out, scratch);
  return out;
}

void SampledVectorField::EvalInto(VecView y, MutVecView out,
                                  MutVecView scratch) const {
  const std::size_t d = center_.size();
  Vec s(d);
  double s2 = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    s[j] = y[j] - center_[j];
    s2 += s[j] * s[j];
  }
  const double radius = trust_radius();
  if (std::sqrt(s2) > radius * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "field evaluated outside its trust region: ||y - c|| = "
        << std::sqrt(s2) << " > " << radius;
    throw ContractViolation(msg.str());
  }
  const std::size_t n = kept_count();
  if (n == 0) {
    for (double& v : out) v = 0.0;
    return;
  }
  const auto& k = simd::Kernels();
  k.row_dots(offsets_.data(), n, d, s.data(), scratch.data());
  const double inv_two_r2 = 1.0 / (2.0 * r_ * r_);
  const double inv_n = 1.0 / static_cast<double>(sample_count_);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = scratch[i];
    const double chi = Chi(t, r_);
    scratch[i] = chi == 0.0 ? 0.0
                            : std::exp((2.0 * t - s2) * inv_two_r2) * chi * inv_n;
  }
  k.weighted_row_sum(gradients_.data(), n, d, scratch.data(), out.data());
}

}  // namespace parlab
