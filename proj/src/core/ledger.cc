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

#include "parlab/core/ledger.h"

#include <algorithm>

namespace parlab {

void DepthWorkLedger::RecordBatch(std::size_t batch_size) {
  std::lock_guard<std::mutex> lock(mu_);
  totals_.depth += 1;
  totals_.work += batch_size;
  totals_.max_batch = std::max<std::uint64_t>(totals_.max_batch, batch_size);
}

LedgerSnapshot DepthWorkLedger::Snapshot() const {
  std::lock_guard<std::mutex> lock(mu_);
  return totals_;
}

void DepthWorkLedger::Reset() {
  std::lock_guard<std::mutex> lock(mu_);
  totals_ = LedgerSnapshot{};
}

}  // namespace parlab
