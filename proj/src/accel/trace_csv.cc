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

#include "parlab/accel/trace_csv.h"

#include <cmath>
#include <iomanip>

namespace parlab {

void WriteFrameworkTraceCsv(std::ostream& os, const FrameworkTrace& trace) {
  os << kFrameworkTraceHeader << '\n';
  os << std::setprecision(17);
  for (const FrameworkRecord& r : trace.records) {
    os << r.k << ',' << r.A << ',' << r.lambda << ',' << r.a << ','
       << r.step_norm << ',';
    if (!std::isnan(r.gap)) os << r.gap;
    os << ',' << r.prox_queries << ',' << r.depth << ',' << r.work << '\n';
  }
}

}  // namespace parlab
