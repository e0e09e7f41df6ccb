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

#ifndef PARLAB_INSTANCES_WALL_H_
#define PARLAB_INSTANCES_WALL_H_

#include <cstddef>
#include <vector>

#include "parlab/core/rng.h"
#include "parlab/core/types.h"

namespace parlab {

struct WallParams {
  double delta_wall = 0.25;     // inner radius of the annulus
  double alpha_wall = 0.5;      // exponent; 1 / log2(1 / delta_wall) by default
  double cone_threshold = 0.3;  // |<v_j, y>| / ||y|| must stay below this
};

// Throws std::invalid_argument if the fields are out of range.
void ValidateWallParams(const WallParams& params);

struct WallEvaluation {
  double value = 0.0;
  Vec gradient;
  double a = 0.0;  // norm of the maximizer's part inside span(v_1..v_i)
  double b = 0.0;  // norm of its part along the residual direction
  Vec y_star;
};

// h(y) = 2 ||y||^{1 + alpha} and its gradient.
double WallBlock(VecView y, double alpha);
Vec WallBlockGradient(VecView y, double alpha);
// h(y) + <grad h(y), x - y>.
double WallTangent(VecView y, VecView x, double alpha);

// Wall value at x using only v_1..v_i (`known`), valid when the residual of x
// off span(known) satisfies the cone condition against the other vectors.
// The outer maximization over the annulus is solved in closed form: the inner
// maximum scales linearly with the radius, so the optimal radius is the
// inner maximum at unit radius clamped to [delta_wall, 1].
WallEvaluation WallEvalReduced(const std::vector<Vec>& known,
                               const WallParams& params, VecView x);

struct PolarGridOptions {
  std::size_t radius_points = 200;
  std::size_t angle_points = 200;
  int refinement_passes = 2;
  double shrink = 10.0;
};

// Same quantity as WallEvalReduced, found by grid search over polar
// coordinates (radius, angle) of (a, b) with local refinement. Slower; used
// to cross-check the closed form.
WallEvaluation WallEvalPolarGrid(const std::vector<Vec>& known,
                                 const WallParams& params, VecView x,
                                 const PolarGridOptions& options = {});

struct BruteForceWall {
  double value = 0.0;  // -infinity if no sample survived the cone rejection
  Vec y_best;
  std::size_t accepted = 0;
};

// Lower bound on the wall at x by sampling y uniformly in the annulus
// delta_wall <= ||y|| <= 1, discarding samples inside any cone around
// `vectors`, and maximizing the tangent value.
BruteForceWall WallEvalBruteforce(const std::vector<Vec>& vectors,
                                  const WallParams& params, VecView x,
                                  std::size_t sample_count, RngStream& rng);

// |<v, x>| >= threshold * ||x||. The zero vector belongs to no cone.
bool ConeMembership(VecView v, VecView x, double threshold);

}  // namespace parlab

#endif  // PARLAB_INSTANCES_WALL_H_
