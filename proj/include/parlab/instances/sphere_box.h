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

#ifndef PARLAB_INSTANCES_SPHERE_BOX_H_
#define PARLAB_INSTANCES_SPHERE_BOX_H_

#include "parlab/core/types.h"

namespace parlab {

struct SphereBoxResult {
  double value = 0.0;  // -infinity when infeasible
  Vec coords;
  bool feasible() const;
};

// max sum_j w_j u_j subject to sum_j u_j^2 = a^2 and |u_j| <= t.
// Returns an empty coordinate vector when a = 0.
SphereBoxResult SphereBoxMax(VecView w, double a, double t);

// Same problem with a separate cap per coordinate. Caps may be +infinity.
SphereBoxResult SphereBoxMaxCapped(VecView w, VecView caps, double a);

}  // namespace parlab

#endif  // PARLAB_INSTANCES_SPHERE_BOX_H_
