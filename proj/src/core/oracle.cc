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

#include "parlab/core/oracle.h"

#include <cmath>
#include <sstream>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"

namespace parlab {

void ValidateBatch(std::span<const Vec> points, std::size_t max_batch,
                   double domain_radius, std::size_t dim) {
  if (points.size() > max_batch) {
    std::ostringstream msg;
    msg << "batch of " << points.size() << " points exceeds the limit Q = "
        << max_batch;
    throw ContractViolation(msg.str());
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      std::ostringstream msg;
      msg << "point " << i << " has dimension " << points[i].size()
          << ", expected " << dim;
      throw ContractViolation(msg.str());
    }
    if (std::isfinite(domain_radius) &&
        Norm(points[i]) > domain_radius + kBallTolerance) {
      std::ostringstream msg;
      msg << "point " << i << " lies outside the domain ball (norm "
          << Norm(points[i]) << " > " << domain_radius << ")";
      throw ContractViolation(msg.str());
    }
  }
}

ParallelOracle::ParallelOracle(std::shared_ptr<const Objective> objective,
                               std::size_t max_batch, double domain_radius,
                               std::shared_ptr<DepthWorkLedger> ledger)
    : objective_(std::move(objective)),
      max_batch_(max_batch),
      domain_radius_(domain_radius),
      ledger_(ledger ? std::move(ledger)
                     : std::make_shared<DepthWorkLedger>()) {}

std::vector<OracleAnswer> ParallelOracle::SubmitBatch(
    std::span<const Vec> points) {
  ValidateBatch(points, max_batch_, domain_radius_, objective_->dim());
  std::vector<OracleAnswer> answers;
  answers.reserve(points.size());
  for (const Vec& p : points) answers.push_back(objective_->Evaluate(p));
  ledger_->RecordBatch(points.size());
  return answers;
}

void ParallelOracle::SubmitBatchGradients(const RowMatrix& points,
                                          RowMatrix& gradients) {
  const std::size_t d = objective_->dim();
  if (points.rows() > max_batch_) {
    std::ostringstream msg;
    msg << "batch of " << points.rows() << " points exceeds the limit Q = "
        << max_batch_;
    throw ContractViolation(msg.str());
  }
  if (points.cols() != d) throw ContractViolation("point dimension mismatch");
  gradients = RowMatrix(points.rows(), d);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    VecView p = points.row(i);
    if (std::isfinite(domain_radius_) &&
        Norm(p) > domain_radius_ + kBallTolerance) {
      std::ostringstream msg;
      msg << "point " << i << " lies outside the domain ball";
      throw ContractViolation(msg.str());
    }
    const OracleAnswer a = objective_->Evaluate(p);
    std::copy(a.gradient.begin(), a.gradient.end(), gradients.row(i).begin());
  }
  ledger_->RecordBatch(points.rows());
}

}  // namespace parlab
