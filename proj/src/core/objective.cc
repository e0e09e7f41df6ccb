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

#include "parlab/core/objective.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parlab/core/linalg.h"

namespace parlab {

void RowMatrix::append_row(VecView r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw std::invalid_argument("row width mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

DistanceObjective::DistanceObjective(Vec anchor, double scale)
    : anchor_(std::move(anchor)), scale_(scale) {}

OracleAnswer DistanceObjective::Evaluate(VecView x) const {
  OracleAnswer out;
  out.gradient = Sub(x, anchor_);
  const double n = Norm(out.gradient);
  out.value = scale_ * n;
  if (n > 0.0) {
    Scale(scale_ / n, out.gradient);
  } else {
    std::fill(out.gradient.begin(), out.gradient.end(), 0.0);
  }
  return out;
}

LinearObjective::LinearObjective(Vec slope, double offset)
    : slope_(std::move(slope)), offset_(offset) {}

OracleAnswer LinearObjective::Evaluate(VecView x) const {
  return {Dot(slope_, x) + offset_, slope_};
}

double LinearObjective::lipschitz() const { return Norm(slope_); }

QuadraticObjective::QuadraticObjective(Vec center, double curvature)
    : center_(std::move(center)), curvature_(curvature) {}

OracleAnswer QuadraticObjective::Evaluate(VecView x) const {
  OracleAnswer out;
  out.gradient = Sub(x, center_);
  out.value = 0.5 * curvature_ * Dot(out.gradient, out.gradient);
  Scale(curvature_, out.gradient);
  return out;
}

std::optional<RowMatrix> QuadraticObjective::Hessian(VecView) const {
  RowMatrix h(center_.size(), center_.size());
  for (std::size_t i = 0; i < center_.size(); ++i) h.row(i)[i] = curvature_;
  return h;
}

DiagonalQuadraticObjective::DiagonalQuadraticObjective(Vec center, Vec weights)
    : center_(std::move(center)), weights_(std::move(weights)) {
  if (center_.size() != weights_.size()) {
    throw std::invalid_argument("center and weights differ in length");
  }
}

OracleAnswer DiagonalQuadraticObjective::Evaluate(VecView x) const {
  OracleAnswer out;
  out.gradient.resize(center_.size());
  for (std::size_t i = 0; i < center_.size(); ++i) {
    const double t = x[i] - center_[i];
    out.value += 0.5 * weights_[i] * t * t;
    out.gradient[i] = weights_[i] * t;
  }
  return out;
}

double DiagonalQuadraticObjective::lipschitz() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

std::optional<RowMatrix> DiagonalQuadraticObjective::Hessian(VecView) const {
  RowMatrix h(center_.size(), center_.size());
  for (std::size_t i = 0; i < center_.size(); ++i) h.row(i)[i] = weights_[i];
  return h;
}

BallPenaltyObjective::BallPenaltyObjective(
    std::shared_ptr<const Objective> inner, double radius, double weight)
    : inner_(std::move(inner)), radius_(radius), weight_(weight) {}

OracleAnswer BallPenaltyObjective::Evaluate(VecView x) const {
  OracleAnswer out = inner_->Evaluate(x);
  const double n = Norm(x);
  if (n > radius_) {
    out.value += weight_ * (n - radius_);
    Axpy(weight_ / n, x, out.gradient);
  }
  return out;
}

}  // namespace parlab
