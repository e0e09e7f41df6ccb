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

#ifndef PARLAB_ACCEL_TRACE_CSV_H_
#define PARLAB_ACCEL_TRACE_CSV_H_

#include <ostream>

#include "parlab/accel/framework.h"

namespace parlab {

inline constexpr const char* kFrameworkTraceHeader =
    "k,A_k,lambda_k,a_k,step_norm,gap,prox_queries,depth,work";

void WriteFrameworkTraceCsv(std::ostream& os, const FrameworkTrace& trace);

}  // namespace parlab

#endif  // PARLAB_ACCEL_TRACE_CSV_H_
