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
#include <memory>

#include <gtest/gtest.h>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"
#include "parlab/core/objective.h"
#include "parlab/core/oracle.h"
#include "parlab/core/rng.h"
#include "parlab/smoothing/minimize.h"
#include "parlab/smoothing/plan.h"
#include "parlab/smoothing/prox_step.h"
#include "parlab/smoothing/vector_field.h"

namespace parlab {
namespace {

std::shared_ptr<const Objective> Linear(std::size_t d, std::uint64_t seed) {
  RngStream rng(seed, 0);
  return std::make_shared<LinearObjective>(rng.UnitVector(d));
}

TEST(Chi, PiecewiseValues) {
  const double r = 0.2, r2 = r * r;
  EXPECT_EQ(Chi(r2 / 2, r), 1.0);
  EXPECT_EQ(Chi(r2, r), 0.0);
  EXPECT_DOUBLE_EQ(Chi(0.75 * r2, r), 0.5);
  EXPECT_EQ(Chi(0.0, r), 1.0);
  EXPECT_EQ(Chi(-2 * r2, r), 0.0);
  EXPECT_DOUBLE_EQ(Chi(-0.75 * r2, r), 0.5);
}

TEST(Chi, ContinuousAndBounded) {
  const double r = 0.3;
  double prev = Chi(-0.2, r);
  for (int k = 1; k <= 40000; ++k) {
    const double t = -0.2 + 0.4 * k / 40000;
    const double v = Chi(t, r);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    EXPECT_LE(std::abs(v - prev), 2.0 / (r * r) * 1e-5 + 1e-12);
    prev = v;
  }
}

TEST(SmoothingParams, Examples) {
  EXPECT_NEAR(SmoothingParams(100, 1.0, 1.0, 0.3, 0.1).r, 0.01, 1e-15);
  EXPECT_EQ(SmoothingParams(10000, 1.0, 1.0, 0.01, 0.1).p, 1);
  EXPECT_THROW(SmoothingParams(10, 1.0, 1.0, 1.0, 0.1), std::invalid_argument);
  EXPECT_THROW(SmoothingParams(10, 1.0, 1.0, 0.1, 1.0), std::invalid_argument);
}

TEST(SmoothingParams, DerivedQuantities) {
  const SmoothingPlan p = SmoothingParams(400, 1.0, 1.0, 0.1, 0.1);
  EXPECT_NEAR(p.r_tilde, p.r / (8 * std::sqrt(std::log(60 / p.eps_oracle))), 1e-18);
  EXPECT_EQ(p.omega.kind(), OmegaSpec::Kind::kPower);
  EXPECT_DOUBLE_EQ(p.omega.exponent(), p.p);
  EXPECT_NEAR(p.omega.coefficient(), 4 * 1.0 / std::pow(p.r_tilde, p.p + 1),
              1e-9 * p.omega.coefficient());
  EXPECT_NEAR(p.eta, 1 / (2 * std::sqrt(std::log(10 / p.eps_apx))), 1e-15);
  EXPECT_NEAR(p.gd_step, p.r_tilde / (48 * p.p * 20.0), 1e-18);
  EXPECT_DOUBLE_EQ(p.eps_apx, p.eps_oracle / 6);
  EXPECT_DOUBLE_EQ(p.nu_call, 0.1 / (2.0 * p.K_max));
  const std::size_t n = FieldSampleCount(400, p.eps_apx, p.nu_call, 1.0);
  EXPECT_EQ(p.sample_count, n);
  const double expect = (400 * std::log(400.0) * std::log(1 / p.eps_apx) +
                         std::log(1 / p.nu_call)) / (p.eps_apx * p.eps_apx);
  EXPECT_EQ(n, static_cast<std::size_t>(std::ceil(expect)));
}

TEST(SmoothingParams, TheoryConstantsLeaveNothingUnset) {
  const SmoothingConstants t = SmoothingConstants::Theory();
  EXPECT_FALSE(t.c.has_value());
  EXPECT_FALSE(t.eps_oracle.has_value());
  const SmoothingPlan p = SmoothingParams(50, 1.0, 1.0, 0.2, 0.1, t);
  EXPECT_GE(p.c, 150.0);
  EXPECT_NEAR(p.eps_oracle, p.eps_prime / (8.0 * 1.0 * 1.0), 1e-18);
}

struct FieldSetup {
  std::shared_ptr<const Objective> f;
  std::unique_ptr<ParallelOracle> oracle;
  SampledVectorField field;
};

FieldSetup MakeField(std::shared_ptr<const Objective> f, VecView center,
                     double r, double eps_apx, std::uint64_t seed) {
  const std::size_t d = f->dim();
  const std::size_t n = FieldSampleCount(d, eps_apx, 1e-3, 1.0);
  auto oracle = std::make_unique<ParallelOracle>(f, n);
  RngStream rng(seed, 1);
  SampledVectorField field =
      SampledVectorField::Sample(*oracle, center, r, FieldEta(eps_apx), n, rng);
  return {std::move(f), std::move(oracle), std::move(field)};
}

TEST(VectorField, LinearFunctionRecoversSlope) {
  const std::size_t d = 10;
  const double eps_apx = 0.1;
  auto f = Linear(d, 51);
  const Vec slope = f->Evaluate(Zeros(d)).gradient;
  RngStream rng(52, 0);
  const Vec center = rng.BallPoint(d, 0.5);
  FieldSetup s = MakeField(f, center, 0.05, eps_apx, 53);
  EXPECT_EQ(s.oracle->ledger().Snapshot().depth, 1u);
  int good = 0;
  for (int k = 0; k < 100; ++k) {
    Vec y = rng.BallPoint(d, s.field.trust_radius());
    for (std::size_t j = 0; j < d; ++j) y[j] += center[j];
    if (Distance(s.field.Eval(y), slope) <= eps_apx) ++good;
  }
  EXPECT_EQ(good, 100);
}

TEST(VectorField, NormAtOriginCancels) {
  const std::size_t d = 8;
  const double eps_apx = 0.1;
  auto f = std::make_shared<DistanceObjective>(Zeros(d));
  FieldSetup s = MakeField(f, Zeros(d), 0.1, eps_apx, 54);
  EXPECT_LE(Norm(s.field.Eval(Zeros(d))), eps_apx);
}

TEST(VectorField, CenterValueIsKeptAverage) {
  const std::size_t d = 6;
  auto f = Linear(d, 55);
  const Vec slope = f->Evaluate(Zeros(d)).gradient;
  const Vec center(d, 0.1);
  FieldSetup s = MakeField(f, center, 0.05, 0.2, 56);
  const Vec at_c = s.field.Eval(center);
  const double share = static_cast<double>(s.field.kept_count()) /
                       static_cast<double>(s.field.sample_count());
  for (std::size_t j = 0; j < d; ++j) EXPECT_NEAR(at_c[j], share * slope[j], 1e-14);
}

TEST(VectorField, DeterministicAndTrustRegionEnforced) {
  const std::size_t d = 6;
  auto f = std::make_shared<DistanceObjective>(Vec(d, 0.3));
  const Vec center = Zeros(d);
  FieldSetup s = MakeField(f, center, 0.05, 0.2, 57);
  Vec edge = Zeros(d);
  edge[2] = s.field.trust_radius();
  const Vec a = s.field.Eval(edge), b = s.field.Eval(edge);
  EXPECT_EQ(a, b);
  edge[2] *= 1.01;
  EXPECT_THROW(s.field.Eval(edge), ContractViolation);
}

SmoothingPlan SmallPlan(std::size_t d, double eps) {
  SmoothingConstants c;
  c.sample_count = 2000;
  return SmoothingParams(d, 1.0, 1.0, eps, 0.1, c);
}

TEST(ProxStep, LinearFunctionMeetsResidualBound) {
  const std::size_t d = 8;
  auto f = Linear(d, 58);
  const Vec slope = f->Evaluate(Zeros(d)).gradient;
  const SmoothingPlan plan = SmallPlan(d, 0.2);
  ParallelOracle oracle(f, plan.sample_count);
  RngStream rng(59, 0);
  const Vec c(d, 0.05);
  const ProxStepResult r = ProxStepGd(oracle, c, plan, rng);
  EXPECT_LE(r.max_radius, plan.r_tilde * (1 + 1e-12));
  const double s = Distance(r.y, c);
  Vec residual = slope;
  Axpy(plan.omega(s), Sub(r.y, c), residual);
  EXPECT_LE(Norm(residual), plan.L * plan.eps_oracle);
  EXPECT_EQ(oracle.ledger().Snapshot().depth, 1u);
}

TEST(ProxStep, NormFarFromKinkAgainstMonteCarlo) {
  const std::size_t d = 8;
  auto f = std::make_shared<DistanceObjective>(Zeros(d));
  const SmoothingPlan plan = SmallPlan(d, 0.2);
  ParallelOracle oracle(f, plan.sample_count);
  RngStream rng(60, 0);
  Vec c = Zeros(d);
  c[0] = 0.5;
  const ProxStepResult r = ProxStepGd(oracle, c, plan, rng);
  EXPECT_LE(Distance(r.y, c), plan.r_tilde * (1 + 1e-12));
  RngStream mc(61, 0);
  const McGradient g = McGradientOracle(*f, r.y, plan.r, 20000, mc);
  Vec residual = g.estimate;
  Axpy(plan.omega(Distance(r.y, c)), Sub(r.y, c), residual);
  EXPECT_LE(Norm(residual), plan.L * plan.eps_oracle + 3 * g.standard_error);
}

TEST(Smoothing, SandwichBound) {
  const std::size_t d = 10;
  auto f = std::make_shared<DistanceObjective>(Vec(d, 0.1));
  const double r = 0.05;
  RngStream rng(62, 0);
  for (int k = 0; k < 50; ++k) {
    const Vec x = rng.BallPoint(d, 1.0);
    const McValue g = McSmoothedValue(*f, x, r, 2000, rng);
    EXPECT_LE(std::abs(g.estimate - f->Value(x)),
              std::sqrt(double(d)) * r + 3 * g.standard_error);
    // Convexity: smoothing never lowers the value in expectation.
    EXPECT_GE(g.estimate, f->Value(x) - 3 * g.standard_error);
  }
}

TEST(Minimize, SubgradientBaselineHitsTarget) {
  auto f = std::make_shared<DistanceObjective>(Vec{0.3, -0.2, 0.1, 0.4});
  const SolverResult r = BaselineSubgradient(f, 1.0, 1.0, 0.1);
  ASSERT_TRUE(r.gap.has_value());
  EXPECT_LE(*r.gap, 0.1);
  EXPECT_EQ(r.trace.depth, 100u);
  EXPECT_EQ(r.trace.work, 100u);
}

TEST(Minimize, DrsBaselineHitsTarget) {
  auto f = std::make_shared<DistanceObjective>(Vec{0.3, -0.2, 0.1, 0.4});
  DrsOptions o;
  o.batch = 400;
  const SolverResult r = BaselineDrs(f, 4, 1.0, 1.0, 0.2, 7, o);
  ASSERT_TRUE(r.gap.has_value());
  EXPECT_LE(*r.gap, 0.2);
  EXPECT_EQ(r.trace.work, r.trace.depth * 400);
}

TEST(Minimize, HighlyParallelHitsTargetAndIsDeterministic) {
  const std::size_t d = 10;
  Vec anchor = Zeros(d);
  anchor[0] = 0.6;
  auto f = std::make_shared<DistanceObjective>(anchor);
  SmoothingConstants c;
  c.sample_count = 300;
  const SolverResult a = HighlyParallelMinimize(f, d, 1.0, 1.0, 0.3, 0.1, 5, c);
  const SolverResult b = HighlyParallelMinimize(f, d, 1.0, 1.0, 0.3, 0.1, 5, c);
  ASSERT_TRUE(a.gap.has_value());
  EXPECT_LE(*a.gap, 0.3);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.trace.depth, b.trace.depth);
  ASSERT_TRUE(a.trace.framework.has_value());
  std::uint64_t prev = 0;
  for (const SolverRecord& rec : a.trace.records) {
    EXPECT_GE(rec.depth, prev);
    prev = rec.depth;
  }
}

}  // namespace
}  // namespace parlab
