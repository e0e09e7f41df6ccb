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

#ifndef PARLAB_INSTANCES_SHIELDED_H_
#define PARLAB_INSTANCES_SHIELDED_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

#include "parlab/core/objective.h"
#include "parlab/core/rng.h"
#include "parlab/instances/lowerbound_params.h"
#include "parlab/instances/nemirovski.h"
#include "parlab/instances/wall.h"

namespace parlab {

struct ShieldedInstance {
  std::size_t d = 0;
  double C = 0.0;
  std::uint64_t seed = 0;
  NemirovskiParams nemirovski;
  WallParams wall;

  std::size_t N() const { return nemirovski.vectors.size(); }
  // gamma == 2 * delta_wall * cone_threshold.
  bool GammaWiringHolds(double tol = 1e-12) const;
  // delta_wall / log2(1 / delta_wall) == 4 sqrt(C N ln d / d) + 1 / sqrt(N).
  bool DeltaEquationHolds(double tol = 1e-8) const;
};

// Cone threshold sqrt(C ln d / d).
double ConeThreshold(std::size_t d, double C);

// Random instance: orthonormal vectors drawn from `seed`, wall and gamma from
// the given parameters.
ShieldedInstance MakeShieldedInstance(const LowerBoundParams& params,
                                      std::uint64_t seed);
ShieldedInstance MakeShieldedInstance(std::size_t d, std::size_t N, double C,
                                      double delta_wall, std::uint64_t seed);

enum class Branch { kNemirovski, kWall };
const char* BranchName(Branch b);

struct ShieldedResult {
  double value = 0.0;
  Vec gradient;
  Branch branch = Branch::kWall;
  double nemirovski_value = 0.0;
  double wall_value = 0.0;
  std::size_t nemirovski_index = 0;
};

// max(Nemirovski(x), Wall(x)); ties go to the wall. The wall uses only
// v_1..v_{known_count}.
ShieldedResult ShieldedEval(const ShieldedInstance& instance,
                            std::size_t known_count, VecView x);

// Whether the residual z of x off span(v_1..v_known) satisfies
// |<v_j, z>| <= cone_threshold * ||z|| for every j > known_count.
bool ReducedPreconditionHolds(const ShieldedInstance& instance,
                              std::size_t known_count, VecView x);

// The instance as an Objective (known_count = N), for the solvers.
class ShieldedObjective final : public Objective {
 public:
  explicit ShieldedObjective(ShieldedInstance instance);
  std::size_t dim() const override { return instance_.d; }
  OracleAnswer Evaluate(VecView x) const override;
  double lipschitz() const override;
  std::string name() const override { return "shielded-nemirovski"; }

 private:
  ShieldedInstance instance_;
};

// Nemirovski function alone as an Objective.
class NemirovskiObjective final : public Objective {
 public:
  NemirovskiObjective(NemirovskiParams params, std::size_t d);
  std::size_t dim() const override { return d_; }
  OracleAnswer Evaluate(VecView x) const override;
  double lipschitz() const override { return 1.0; }
  // Minimum over the unit ball when gamma = 0: -1/sqrt(N) at -sum_j v_j/sqrt(N).
  std::optional<double> optimal_value() const override;
  std::string name() const override { return "nemirovski"; }
  const NemirovskiParams& params() const { return params_; }

 private:
  NemirovskiParams params_;
  std::size_t d_;
};

}  // namespace parlab

#endif  // PARLAB_INSTANCES_SHIELDED_H_
