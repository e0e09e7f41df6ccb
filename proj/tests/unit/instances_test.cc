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

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"
#include "parlab/core/rng.h"
#include "parlab/instances/instance_json.h"
#include "parlab/instances/lowerbound_params.h"
#include "parlab/instances/nemirovski.h"
#include "parlab/instances/shielded.h"
#include "parlab/instances/sphere_box.h"

namespace parlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

NemirovskiParams TwoAxes(double gamma) {
  return {{{1, 0, 0}, {0, 1, 0}}, gamma};
}

TEST(Nemirovski, DirectMaximum) {
  const NemirovskiResult r = NemirovskiEval(TwoAxes(0.0), Vec{0.5, 0.2, 0.0});
  EXPECT_DOUBLE_EQ(r.value, 0.5);
  EXPECT_EQ(r.subgradient, (Vec{1, 0, 0}));
  EXPECT_EQ(r.argmax_index, 1u);
}

TEST(Nemirovski, ValueAtReferencePoint) {
  const NemirovskiParams p = TwoAxes(0.0);
  const Vec x = NemirovskiReferencePoint(p);
  EXPECT_NEAR(x[0], -1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(NemirovskiEval(p, x).value, -1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Nemirovski, ZeroQueryTieBreaksToSmallestIndex) {
  const NemirovskiResult r = NemirovskiEval(TwoAxes(0.1), Vec{0, 0, 0});
  EXPECT_DOUBLE_EQ(r.value, -0.1);
  EXPECT_EQ(r.argmax_index, 1u);
  // Exact tie between index 1 and 2: v1.x - g = v2.x - 2g.
  const NemirovskiResult t = NemirovskiEval(TwoAxes(0.1), Vec{0.0, 0.1, 0.0});
  EXPECT_EQ(t.argmax_index, 1u);
}

TEST(Nemirovski, RejectsDimensionMismatch) {
  EXPECT_THROW(NemirovskiEval(TwoAxes(0.0), Vec{1.0, 2.0}), std::invalid_argument);
}

TEST(SphereBox, SingleCoordinate) {
  const SphereBoxResult r = SphereBoxMax(Vec{3.0}, 0.5, 1.0);
  EXPECT_DOUBLE_EQ(r.value, 1.5);
  ASSERT_EQ(r.coords.size(), 1u);
  EXPECT_DOUBLE_EQ(r.coords[0], 0.5);
}

TEST(SphereBox, SingleCoordinateAgreesWithCircleGrid) {
  // Feasible set {u : |u| = 0.5, |u| <= 1} is {+-0.5}; grid over the circle.
  double best = -kInf;
  for (int k = 0; k <= 62832; ++k) {
    const double u = 0.5 * std::cos(k * 1e-4);
    if (std::abs(std::abs(u) - 0.5) <= 1e-12) best = std::max(best, 3.0 * u);
  }
  EXPECT_NEAR(SphereBoxMax(Vec{3.0}, 0.5, 1.0).value, best, 1e-6);
}

TEST(SphereBox, InfeasibleCap) {
  const SphereBoxResult r = SphereBoxMax(Vec{3.0}, 0.5, 0.3);
  EXPECT_EQ(r.value, -kInf);
  EXPECT_FALSE(r.feasible());
}

TEST(SphereBox, ZeroObjective) {
  const SphereBoxResult r = SphereBoxMax(Vec{0.0, 0.0}, 0.1, 1.0);
  EXPECT_DOUBLE_EQ(r.value, 0.0);
  EXPECT_TRUE(r.feasible());
}

TEST(SphereBox, EmptyCoordinates) {
  EXPECT_EQ(SphereBoxMax(Vec{}, 0.3, 1.0).value, -kInf);
  const SphereBoxResult zero = SphereBoxMax(Vec{}, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(zero.value, 0.0);
  EXPECT_TRUE(zero.coords.empty());
  const SphereBoxResult zero2 = SphereBoxMax(Vec{1.0, 2.0}, 0.0, 1.0);
  EXPECT_DOUBLE_EQ(zero2.value, 0.0);
}

TEST(SphereBox, RejectsNegativeArguments) {
  EXPECT_THROW(SphereBoxMax(Vec{1.0}, -0.1, 1.0), std::invalid_argument);
  EXPECT_THROW(SphereBoxMax(Vec{1.0}, 0.1, -1.0), std::invalid_argument);
}

TEST(SphereBox, MatchesDenseScanInTwoCoordinates) {
  RngStream rng(21, 0);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec w = {rng.Normal(), rng.Normal()};
    const double a = 0.1 + 0.9 * rng.Uniform();
    const double t = a * (0.72 + 0.6 * rng.Uniform());
    const SphereBoxResult r = SphereBoxMax(w, a, t);
    double best = -kInf;
    auto consider = [&](double u0, double u1) {
      if (std::abs(u0) <= t && std::abs(u1) <= t) {
        best = std::max(best, w[0] * u0 + w[1] * u1);
      }
    };
    for (int k = 0; k < 400000; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / 400000;
      consider(a * std::cos(phi), a * std::sin(phi));
    }
    if (t <= a) {
      const double o = std::sqrt(a * a - t * t);
      for (double s0 : {-1.0, 1.0}) {
        for (double s1 : {-1.0, 1.0}) {
          consider(s0 * t, s1 * o);
          consider(s0 * o, s1 * t);
        }
      }
    }
    if (2 * t * t < a * a) {
      EXPECT_EQ(r.value, -kInf);
      continue;
    }
    EXPECT_NEAR(r.value, best, 1e-6) << "trial " << trial;
    EXPECT_NEAR(Norm(r.coords), a, 1e-10);
    for (double c : r.coords) EXPECT_LE(std::abs(c), t * (1 + 1e-12));
  }
}

TEST(SphereBox, CappedVariantWithFreeCoordinate) {
  // Free last coordinate takes the remaining mass.
  const SphereBoxResult r =
      SphereBoxMaxCapped(Vec{1.0, 1.0}, Vec{0.1, kInf}, 1.0);
  EXPECT_NEAR(r.coords[0], 0.1, 1e-12);
  EXPECT_NEAR(r.coords[1], std::sqrt(0.99), 1e-12);
  EXPECT_NEAR(r.value, 0.1 + std::sqrt(0.99), 1e-12);
}

TEST(SphereBox, KktStructureInHigherDimension) {
  RngStream rng(22, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t i = 2 + trial % 6;
    const Vec w = rng.NormalVector(i);
    const double a = 0.5, t = 0.5 * (1.2 / std::sqrt(double(i)) + 0.5 * rng.Uniform());
    const SphereBoxResult r = SphereBoxMax(w, a, t);
    if (!r.feasible()) {
      EXPECT_GT(a * a, i * t * t);
      continue;
    }
    // Uncapped coordinates are proportional to w with a common factor.
    double factor = -1.0;
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_GE(r.coords[j] * w[j], 0.0);
      if (std::abs(r.coords[j]) < t * (1 - 1e-9) && w[j] != 0.0) {
        const double f = r.coords[j] / w[j];
        if (factor < 0) factor = f;
        EXPECT_NEAR(f, factor, 1e-8 * factor);
      }
    }
    // Random feasible points never beat it.
    for (int k = 0; k < 200; ++k) {
      Vec u = rng.NormalVector(i);
      for (double& c : u) c = std::clamp(c, -t, t);
      const double n = Norm(u);
      if (n == 0.0) continue;
      Scale(a / n, u);
      bool ok = true;
      for (double c : u) ok = ok && std::abs(c) <= t;
      if (ok) {
        EXPECT_LE(Dot(w, u), r.value + 1e-12);
      }
    }
  }
}

TEST(LowerBoundParams, DeltaFromTarget) {
  EXPECT_NEAR(SolveDeltaForTarget(0.125), 0.25, 1e-12);
  EXPECT_THROW(SolveDeltaForTarget(0.6), std::domain_error);
  try {
    SolveDeltaForTarget(4.5);
  } catch (const std::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("4.5"), std::string::npos);
  }
}

TEST(LowerBoundParams, AlphaFromDelta) {
  const ShieldedInstance inst = MakeShieldedInstance(50, 3, 1.0, 0.25, 1);
  EXPECT_DOUBLE_EQ(inst.wall.alpha_wall, 0.5);
}

TEST(LowerBoundParams, DeskScaleConditionFails) {
  LowerBoundOptions o;
  o.fallback_delta = 0.25;
  const LowerBoundParams p = DeriveLowerBoundParams(500, 5, 100, 0.1, o);
  EXPECT_FALSE(p.theorem_condition_holds);
  EXPECT_NEAR(p.C, 12 + 4 * std::log(1000.0) / std::log(500.0), 1e-12);
  EXPECT_NEAR(p.cone_threshold, std::sqrt(p.C * std::log(500.0) / 500), 1e-15);
  // The delta equation has no root here, so the fallback is used.
  EXPECT_FALSE(p.delta_equation_solved);
  EXPECT_DOUBLE_EQ(p.delta_wall, 0.25);
  EXPECT_NEAR(p.gamma, 2 * 0.25 * p.cone_threshold, 1e-15);
}

TEST(LowerBoundParams, UnsolvableWithoutFallbackIsRejected) {
  EXPECT_THROW(DeriveLowerBoundParams(500, 5, 100, 0.1), std::domain_error);
}

TEST(LowerBoundParams, ConstantForTargetInvertsTheEquation) {
  const double C = ConstantForTarget(500, 5, 0.45);
  EXPECT_NEAR(DeltaTarget(500, 5, C), 0.45, 1e-12);
  LowerBoundOptions o;
  o.C = C;
  const LowerBoundParams p = DeriveLowerBoundParams(500, 5, 100, 0.1, o);
  EXPECT_TRUE(p.delta_equation_solved);
  EXPECT_NEAR(p.delta_wall / std::log2(1 / p.delta_wall), 0.45, 1e-10);
  EXPECT_NEAR(p.alpha_wall, 1 / std::log2(1 / p.delta_wall), 1e-15);
}

TEST(LowerBoundParams, TheoremConditionAtLargeDimension) {
  LowerBoundOptions o;
  o.fallback_delta = 0.25;
  const LowerBoundParams p = DeriveLowerBoundParams(1000000000, 2, 1, 0.5, o);
  EXPECT_EQ(p.theorem_condition_holds,
            std::log(2.0) * 2 * p.cone_threshold <= 0.25);
  EXPECT_TRUE(p.theorem_condition_holds);
}

TEST(LowerBoundParams, RejectsBadInputs) {
  EXPECT_THROW(DeriveLowerBoundParams(1, 1, 1, 0.1), std::invalid_argument);
  EXPECT_THROW(DeriveLowerBoundParams(10, 6, 1, 0.1), std::invalid_argument);
  EXPECT_THROW(DeriveLowerBoundParams(10, 2, 0.5, 0.1), std::invalid_argument);
  EXPECT_THROW(DeriveLowerBoundParams(10, 2, 1, 1.0), std::invalid_argument);
}

TEST(ConeMembership, Examples) {
  EXPECT_TRUE(ConeMembership(Vec{1, 0, 0}, Vec{1, 0, 0}, 0.3));
  EXPECT_FALSE(ConeMembership(Vec{1, 0, 0}, Vec{0, 1, 0}, 0.3));
  EXPECT_TRUE(ConeMembership(Vec{1, 0, 0}, Vec{0.3, std::sqrt(0.91), 0}, 0.3));
  EXPECT_FALSE(ConeMembership(Vec{1, 0, 0}, Vec{0, 0, 0}, 0.3));
}

ShieldedInstance SmallInstance(std::uint64_t seed, std::size_t d = 30,
                               std::size_t N = 3) {
  return MakeShieldedInstance(d, N, 1.0, 0.25, seed);
}

TEST(Shielded, WiringHolds) {
  const ShieldedInstance inst = SmallInstance(1);
  EXPECT_TRUE(inst.GammaWiringHolds());
  EXPECT_LE(OrthonormalityDefect(inst.nemirovski.vectors), 1e-10);
}

TEST(Shielded, ValueAtZeroIsLargerBranch) {
  const ShieldedInstance inst = SmallInstance(2);
  const double gamma = inst.nemirovski.gamma;
  const double alpha = inst.wall.alpha_wall, delta = inst.wall.delta_wall;
  const double nem = -gamma;
  const double wall = -2 * alpha * std::pow(delta, 1 + alpha);
  for (std::size_t known = 0; known <= inst.N(); ++known) {
    const ShieldedResult r = ShieldedEval(inst, known, Zeros(inst.d));
    EXPECT_NEAR(r.nemirovski_value, nem, 1e-15);
    EXPECT_NEAR(r.wall_value, wall, 1e-12);
    EXPECT_NEAR(r.value, std::max(nem, wall), 1e-12);
    EXPECT_EQ(r.branch, wall >= nem ? Branch::kWall : Branch::kNemirovski);
  }
}

TEST(Shielded, WallWinsWhenResidualIsLarge) {
  // x = w + z with ||z|| >= delta and the Nemirovski argmax beyond i.
  RngStream rng(23, 0);
  const ShieldedInstance inst = SmallInstance(3, 60, 3);
  const std::size_t i = 1;
  int tested = 0;
  for (int trial = 0; trial < 500 && tested < 20; ++trial) {
    const Vec x = rng.BallPoint(inst.d, 1.0);
    if (!ReducedPreconditionHolds(inst, i, x)) continue;
    const NemirovskiResult nem = NemirovskiEval(inst.nemirovski, x);
    const std::vector<Vec> known(inst.nemirovski.vectors.begin(),
                                 inst.nemirovski.vectors.begin() + i);
    const double z = Norm(ProjectComplement(known, x));
    if (nem.argmax_index <= i || z < inst.wall.delta_wall) continue;
    ++tested;
    const ShieldedResult r = ShieldedEval(inst, i, x);
    EXPECT_EQ(r.branch, Branch::kWall);
    EXPECT_GE(r.wall_value, z - 1e-12);
  }
  EXPECT_GT(tested, 0);
}

TEST(Shielded, TieGoesToWall) {
  // With gamma chosen so both branches agree at 0.
  ShieldedInstance inst = SmallInstance(4);
  const double alpha = inst.wall.alpha_wall, delta = inst.wall.delta_wall;
  inst.nemirovski.gamma = 2 * alpha * std::pow(delta, 1 + alpha);
  const ShieldedResult r = ShieldedEval(inst, 0, Zeros(inst.d));
  EXPECT_EQ(r.nemirovski_value, r.wall_value);
  EXPECT_EQ(r.branch, Branch::kWall);
}

TEST(Shielded, ConvexAndSubgradientInequality) {
  RngStream rng(24, 0);
  const ShieldedInstance inst = SmallInstance(5, 20, 4);
  for (int k = 0; k < 1000; ++k) {
    const Vec x1 = rng.BallPoint(inst.d, 1.0), x2 = rng.BallPoint(inst.d, 1.0);
    const double th = rng.Uniform();
    const ShieldedResult r1 = ShieldedEval(inst, inst.N(), x1);
    const ShieldedResult r2 = ShieldedEval(inst, inst.N(), x2);
    const double mid = ShieldedEval(inst, inst.N(), Combine(th, x1, 1 - th, x2)).value;
    EXPECT_LE(mid, th * r1.value + (1 - th) * r2.value + 1e-7);
    EXPECT_GE(r2.value, r1.value + Dot(r1.gradient, Sub(x2, x1)) - 1e-7);
  }
}

TEST(Shielded, ObjectiveWrapperUsesAllVectors) {
  const ShieldedInstance inst = SmallInstance(6);
  ShieldedObjective f(inst);
  RngStream rng(25, 0);
  const Vec x = rng.BallPoint(inst.d, 1.0);
  EXPECT_EQ(f.Value(x), ShieldedEval(inst, inst.N(), x).value);
  EXPECT_DOUBLE_EQ(f.lipschitz(), std::max(1.0, 2 * (1 + inst.wall.alpha_wall)));
}

TEST(Shielded, KnownCountBeyondNIsRejected) {
  const ShieldedInstance inst = SmallInstance(7);
  EXPECT_THROW(ShieldedEval(inst, inst.N() + 1, Zeros(inst.d)),
               std::invalid_argument);
}

TEST(InstanceJson, RoundTripIsBitExact) {
  const ShieldedInstance inst = MakeShieldedInstance(40, 4, 1.7, 0.2, 99);
  const nlohmann::json j = InstanceToJson(inst);
  for (const char* key : {"d", "N", "gamma", "delta_wall", "alpha_wall", "C",
                          "seed", "vectors"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  const ShieldedInstance back = InstanceFromJson(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(back.d, inst.d);
  EXPECT_EQ(back.seed, inst.seed);
  EXPECT_EQ(back.C, inst.C);
  EXPECT_EQ(back.nemirovski.gamma, inst.nemirovski.gamma);
  EXPECT_EQ(back.nemirovski.vectors, inst.nemirovski.vectors);
  EXPECT_EQ(back.wall.delta_wall, inst.wall.delta_wall);
  EXPECT_EQ(back.wall.alpha_wall, inst.wall.alpha_wall);
  EXPECT_EQ(back.wall.cone_threshold, inst.wall.cone_threshold);
}

TEST(InstanceJson, RejectsUnknownAndMissingKeys) {
  nlohmann::json j = InstanceToJson(MakeShieldedInstance(10, 2, 1.0, 0.25, 1));
  nlohmann::json extra = j;
  extra["surprise"] = 1;
  EXPECT_THROW(InstanceFromJson(extra), SchemaError);
  nlohmann::json missing = j;
  missing.erase("vectors");
  EXPECT_THROW(InstanceFromJson(missing), SchemaError);
}

TEST(InstanceJson, HexDoublesRoundTrip) {
  for (double v : {0.1, -1e-300, 3.0, std::numbers::pi, 1e308}) {
    EXPECT_EQ(ParseHexDouble(HexDouble(v)), v);
  }
  EXPECT_THROW(ParseHexDouble("zz"), SchemaError);
}

}  // namespace
}  // namespace parlab
