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

#include "parlab/instances/shielded.h"

#include <cmath>
#include <stdexcept>

#include "parlab/core/linalg.h"

namespace parlab {

double ConeThreshold(std::size_t d, double C) {
  const double dd = static_cast<double>(d);
  return std::sqrt(C * std::log(dd) / dd);
}

bool ShieldedInstance::GammaWiringHolds(double tol) const {
  return std::abs(nemirovski.gamma -
                  2.0 * wall.delta_wall * wall.cone_threshold) <= tol;
}

bool ShieldedInstance::DeltaEquationHolds(double tol) const {
  const double lhs = wall.delta_wall / std::log2(1.0 / wall.delta_wall);
  return std::abs(lhs - DeltaTarget(d, N(), C)) <= tol;
}

ShieldedInstance MakeShieldedInstance(std::size_t d, std::size_t N, double C,
                                      double delta_wall, std::uint64_t seed) {
  ShieldedInstance inst;
  inst.d = d;
  inst.C = C;
  inst.seed = seed;
  inst.wall.delta_wall = delta_wall;
  inst.wall.alpha_wall = 1.0 / std::log2(1.0 / delta_wall);
  inst.wall.cone_threshold = ConeThreshold(d, C);
  ValidateWallParams(inst.wall);
  inst.nemirovski.gamma = 2.0 * delta_wall * inst.wall.cone_threshold;
  RngStream rng(seed, MixKey(0x696e7374ULL, 0));
  inst.nemirovski.vectors = OrthonormalComplementSample({}, N, d, rng);
  return inst;
}

ShieldedInstance MakeShieldedInstance(const LowerBoundParams& params,
                                      std::uint64_t seed) {
  return MakeShieldedInstance(params.d, params.N, params.C, params.delta_wall,
                              seed);
}

const char* BranchName(Branch b) {
  return b == Branch::kWall ? "wall" : "nemirovski";
}

ShieldedResult ShieldedEval(const ShieldedInstance& instance,
                            std::size_t known_count, VecView x) {
  if (known_count > instance.N()) {
    throw std::invalid_argument("known_count exceeds N");
  }
  if (x.size() != instance.d) throw std::invalid_argument("dimension mismatch");
  const NemirovskiResult nem = NemirovskiEval(instance.nemirovski, x);
  const std::vector<Vec> known(
      instance.nemirovski.vectors.begin(),
      instance.nemirovski.vectors.begin() + known_count);
  WallEvaluation wall = WallEvalReduced(known, instance.wall, x);

  ShieldedResult out;
  out.nemirovski_value = nem.value;
  out.nemirovski_index = nem.argmax_index;
  out.wall_value = wall.value;
  if (wall.value >= nem.value) {
    out.value = wall.value;
    out.gradient = std::move(wall.gradient);
    out.branch = Branch::kWall;
  } else {
    out.value = nem.value;
    out.gradient = nem.subgradient;
    out.branch = Branch::kNemirovski;
  }
  return out;
}

bool ReducedPreconditionHolds(const ShieldedInstance& instance,
                              std::size_t known_count, VecView x) {
  const auto& vs = instance.nemirovski.vectors;
  Vec z(x.begin(), x.end());
  for (std::size_t j = 0; j < known_count; ++j) Axpy(-Dot(vs[j], x), vs[j], z);
  const double zn = Norm(z);
  for (std::size_t j = known_count; j < vs.size(); ++j) {
    if (std::abs(Dot(vs[j], z)) > instance.wall.cone_threshold * zn) {
      return false;
    }
  }
  return true;
}

ShieldedObjective::ShieldedObjective(ShieldedInstance instance)
    : instance_(std::move(instance)) {}

OracleAnswer ShieldedObjective::Evaluate(VecView x) const {
  ShieldedResult r = ShieldedEval(instance_, instance_.N(), x);
  return {r.value, std::move(r.gradient)};
}

double ShieldedObjective::lipschitz() const {
  return std::max(1.0, 2.0 * (1.0 + instance_.wall.alpha_wall));
}

NemirovskiObjective::NemirovskiObjective(NemirovskiParams params,
                                         std::size_t d)
    : params_(std::move(params)), d_(d) {}

std::optional<double> NemirovskiObjective::optimal_value() const {
  if (params_.gamma != 0.0) return std::nullopt;
  return -1.0 / std::sqrt(static_cast<double>(params_.vectors.size()));
}

OracleAnswer NemirovskiObjective::Evaluate(VecView x) const {
  NemirovskiResult r = NemirovskiEval(params_, x);
  return {r.value, std::move(r.subgradient)};
}

}  // namespace parlab
