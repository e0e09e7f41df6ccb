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

#ifndef PARLAB_SMOOTHING_VECTOR_FIELD_H_
#define PARLAB_SMOOTHING_VECTOR_FIELD_H_

#include <cstddef>

#include "parlab/core/oracle.h"
#include "parlab/core/rng.h"
#include "parlab/core/types.h"

namespace parlab {

// Importance-weighted estimate of the gradient of the Gaussian smoothing of f
// around a fixed center, built from one batch of subgradients at Gaussian
// samples. Valid on the ball of radius eta * r / 4 around the center.
class SampledVectorField {
 public:
  // Draws `sample_count` points c + r * xi and queries them as one batch.
  static SampledVectorField Sample(ParallelOracle& f, VecView center, double r,
                                   double eta, std::size_t sample_count,
                                   RngStream& rng);

  // Throws ContractViolation when ||y - center|| exceeds the trust radius.
  Vec Eval(VecView y) const;
  // Writes the field at y into `out`; `scratch` must hold sample_count
  // entries. Avoids allocation in tight loops.
  void EvalInto(VecView y, MutVecView out, MutVecView scratch) const;

  const Vec& center() const { return center_; }
  double r() const { return r_; }
  double eta() const { return eta_; }
  double trust_radius() const { return eta_ * r_ / 4.0; }
  std::size_t sample_count() const { return sample_count_; }
  // Samples inside the (sqrt(d) + 1/eta) r cutoff; the rest contribute zero.
  std::size_t kept_count() const { return offsets_.rows(); }

 private:
  Vec center_;
  double r_ = 0.0;
  double eta_ = 0.0;
  std::size_t sample_count_ = 0;
  RowMatrix offsets_;    // x_i - c, kept samples only
  RowMatrix gradients_;  // subgradients at x_i, kept samples only
};

}  // namespace parlab

#endif  // PARLAB_SMOOTHING_VECTOR_FIELD_H_
