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

#ifndef PARLAB_CORE_LEDGER_H_
#define PARLAB_CORE_LEDGER_H_

#include <cstddef>
#include <cstdint>
#include <mutex>

namespace parlab {

struct LedgerSnapshot {
  std::uint64_t depth = 0;
  std::uint64_t work = 0;
  std::uint64_t max_batch = 0;
};

// Counts parallel rounds (depth) and total oracle points (work). Each batch
// submission adds one round. Safe to share across threads.
class DepthWorkLedger {
 public:
  void RecordBatch(std::size_t batch_size);
  LedgerSnapshot Snapshot() const;
  void Reset();

 private:
  mutable std::mutex mu_;
  LedgerSnapshot totals_;
};

}  // namespace parlab

#endif  // PARLAB_CORE_LEDGER_H_
