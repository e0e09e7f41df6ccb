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

#ifndef PARLAB_CORE_ORACLE_H_
#define PARLAB_CORE_ORACLE_H_

#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "parlab/core/ledger.h"
#include "parlab/core/objective.h"
#include "parlab/core/types.h"

namespace parlab {

// Checks a batch against the per-round limit and the domain ball. Throws
// ContractViolation naming the limit or the offending index.
void ValidateBatch(std::span<const Vec> points, std::size_t max_batch,
                   double domain_radius, std::size_t dim);

inline constexpr double kBallTolerance = 1e-9;

// First-order oracle that answers up to `max_batch` points per round and
// records depth and work in a ledger.
class ParallelOracle {
 public:
  // domain_radius = infinity disables the ball check.
  ParallelOracle(std::shared_ptr<const Objective> objective,
                 std::size_t max_batch,
                 double domain_radius = std::numeric_limits<double>::infinity(),
                 std::shared_ptr<DepthWorkLedger> ledger = nullptr);

  std::vector<OracleAnswer> SubmitBatch(std::span<const Vec> points);
  // Same as SubmitBatch but writes only gradients into rows of `gradients`.
  void SubmitBatchGradients(const RowMatrix& points, RowMatrix& gradients);

  const Objective& objective() const { return *objective_; }
  std::shared_ptr<const Objective> objective_ptr() const { return objective_; }
  std::size_t max_batch() const { return max_batch_; }
  double domain_radius() const { return domain_radius_; }
  DepthWorkLedger& ledger() { return *ledger_; }
  std::shared_ptr<DepthWorkLedger> ledger_ptr() const { return ledger_; }

 private:
  std::shared_ptr<const Objective> objective_;
  std::size_t max_batch_;
  double domain_radius_;
  std::shared_ptr<DepthWorkLedger> ledger_;
};

}  // namespace parlab

#endif  // PARLAB_CORE_ORACLE_H_
