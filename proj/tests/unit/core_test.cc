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
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "parlab/core/errors.h"
#include "parlab/core/ledger.h"
#include "parlab/core/linalg.h"
#include "parlab/core/objective.h"
#include "parlab/core/oracle.h"
#include "parlab/core/rng.h"

namespace parlab {
namespace {

std::vector<Vec> Points(std::size_t n, std::size_t d, RngStream& rng) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(rng.BallPoint(d, 1.0));
  return out;
}

ParallelOracle MakeOracle(std::size_t d, std::size_t Q) {
  return ParallelOracle(std::make_shared<DistanceObjective>(Zeros(d)), Q, 1.0);
}

TEST(SubmitBatch, HundredPointsCountOneRound) {
  RngStream rng(1, 0);
  ParallelOracle oracle = MakeOracle(4, 100);
  const auto answers = oracle.SubmitBatch(Points(100, 4, rng));
  EXPECT_EQ(answers.size(), 100u);
  const LedgerSnapshot s = oracle.ledger().Snapshot();
  EXPECT_EQ(s.depth, 1u);
  EXPECT_EQ(s.work, 100u);
}

TEST(SubmitBatch, SuccessiveBatchesAccumulate) {
  RngStream rng(2, 0);
  ParallelOracle oracle = MakeOracle(4, 10);
  oracle.SubmitBatch(Points(3, 4, rng));
  oracle.SubmitBatch(Points(7, 4, rng));
  const LedgerSnapshot s = oracle.ledger().Snapshot();
  EXPECT_EQ(s.depth, 2u);
  EXPECT_EQ(s.work, 10u);
  EXPECT_EQ(s.max_batch, 7u);
}

TEST(SubmitBatch, OversizedBatchNamesTheLimit) {
  RngStream rng(3, 0);
  ParallelOracle oracle = MakeOracle(4, 5);
  try {
    oracle.SubmitBatch(Points(6, 4, rng));
    FAIL() << "expected ContractViolation";
  } catch (const ContractViolation& e) {
    EXPECT_NE(std::string(e.what()).find("Q = 5"), std::string::npos);
  }
  EXPECT_EQ(oracle.ledger().Snapshot().depth, 0u);
}

TEST(SubmitBatch, PointOutsideBallNamesItsIndex) {
  ParallelOracle oracle = MakeOracle(2, 5);
  std::vector<Vec> pts = {{0.1, 0.0}, {0.0, 0.0}, {1.0, 0.5}};
  try {
    oracle.SubmitBatch(pts);
    FAIL() << "expected ContractViolation";
  } catch (const ContractViolation& e) {
    EXPECT_NE(std::string(e.what()).find("point 2"), std::string::npos);
  }
}

TEST(SubmitBatch, BallToleranceAcceptsRoundoff) {
  ParallelOracle oracle = MakeOracle(2, 1);
  std::vector<Vec> pts = {{1.0 + 5e-10, 0.0}};
  EXPECT_NO_THROW(oracle.SubmitBatch(pts));
  std::vector<Vec> far = {{1.0 + 1e-8, 0.0}};
  EXPECT_THROW(oracle.SubmitBatch(far), ContractViolation);
}

TEST(SubmitBatch, AnswersMatchObjective) {
  RngStream rng(4, 0);
  auto f = std::make_shared<DistanceObjective>(Vec{0.2, -0.1, 0.3});
  ParallelOracle oracle(f, 8, 1.0);
  const auto pts = Points(8, 3, rng);
  const auto answers = oracle.SubmitBatch(pts);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const OracleAnswer direct = f->Evaluate(pts[i]);
    EXPECT_EQ(answers[i].value, direct.value);
    EXPECT_EQ(answers[i].gradient, direct.gradient);
  }
}

TEST(SubmitBatch, GradientMatrixFormCountsOneRound) {
  RngStream rng(5, 0);
  auto f = std::make_shared<LinearObjective>(Vec{1.0, 2.0});
  ParallelOracle oracle(f, 4);
  RowMatrix pts(4, 2), grads(4, 2);
  for (std::size_t i = 0; i < 4; ++i) {
    pts.row(i)[0] = rng.Normal();
    pts.row(i)[1] = rng.Normal();
  }
  oracle.SubmitBatchGradients(pts, grads);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(grads.row(i)[0], 1.0);
    EXPECT_EQ(grads.row(i)[1], 2.0);
  }
  EXPECT_EQ(oracle.ledger().Snapshot().depth, 1u);
  EXPECT_EQ(oracle.ledger().Snapshot().work, 4u);
}

TEST(Ledger, BoundsHoldAfterRandomBatches) {
  RngStream rng(6, 0);
  const std::size_t Q = 9;
  ParallelOracle oracle = MakeOracle(3, Q);
  std::uint64_t prev_depth = 0, prev_work = 0;
  for (int b = 0; b < 200; ++b) {
    oracle.SubmitBatch(Points(1 + rng.NextU64() % Q, 3, rng));
    const LedgerSnapshot s = oracle.ledger().Snapshot();
    EXPECT_LE(s.depth, s.work);
    EXPECT_LE(s.work, Q * s.depth);
    EXPECT_GE(s.depth, prev_depth);
    EXPECT_GE(s.work, prev_work);
    prev_depth = s.depth;
    prev_work = s.work;
  }
}

TEST(Ledger, ConcurrentRecordingIsExact) {
  DepthWorkLedger ledger;
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int i = 0; i < 1000; ++i) ledger.RecordBatch(3);
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ledger.Snapshot().depth, 4000u);
  EXPECT_EQ(ledger.Snapshot().work, 12000u);
}

TEST(ProjectSpan, AxisProjection) {
  EXPECT_EQ(ProjectSpan({{1.0, 0.0}}, Vec{3.0, 4.0}), (Vec{3.0, 0.0}));
}

TEST(ProjectSpan, EmptyBasisGivesZero) {
  EXPECT_EQ(ProjectSpan({}, Vec{1.0, -2.0, 5.0}), (Vec{0.0, 0.0, 0.0}));
}

TEST(ProjectSpan, CoordinatePlane) {
  EXPECT_EQ(ProjectSpan({{1, 0, 0}, {0, 1, 0}}, Vec{1.0, 2.0, 3.0}),
            (Vec{1.0, 2.0, 0.0}));
}

TEST(ProjectSpan, RejectsNonOrthonormalBasis) {
  EXPECT_THROW(ProjectSpan({{1, 0}, {1, 1}}, Vec{1.0, 1.0}), ContractViolation);
  EXPECT_THROW(ProjectSpan({{2, 0}}, Vec{1.0, 1.0}), ContractViolation);
}

TEST(ProjectSpan, ResidualOrthogonalIdempotentAndPythagorean) {
  RngStream rng(7, 0);
  const std::size_t d = 25;
  for (int trial = 0; trial < 50; ++trial) {
    const auto basis = OrthonormalComplementSample({}, 1 + trial % 8, d, rng);
    const Vec x = rng.NormalVector(d);
    const Vec w = ProjectSpan(basis, x);
    const Vec z = Sub(x, w);
    for (const Vec& b : basis) EXPECT_NEAR(Dot(b, z), 0.0, 1e-9);
    EXPECT_LE(Distance(ProjectSpan(basis, w), w), 1e-12);
    const double n2 = Dot(x, x);
    EXPECT_NEAR(n2, Dot(w, w) + Dot(z, z), 1e-9 * n2);
    EXPECT_LE(Distance(ProjectComplement(basis, x), z), 1e-14);
  }
}

TEST(OrthonormalComplementSample, AvoidsTheBasis) {
  RngStream rng(8, 0);
  const auto frame = OrthonormalComplementSample({{1, 0, 0}}, 2, 3, rng);
  ASSERT_EQ(frame.size(), 2u);
  for (const Vec& v : frame) {
    EXPECT_NEAR(v[0], 0.0, 1e-10);
    EXPECT_NEAR(Norm(v), 1.0, 1e-10);
  }
  EXPECT_NEAR(Dot(frame[0], frame[1]), 0.0, 1e-10);
}

TEST(OrthonormalComplementSample, SeedDeterministic) {
  RngStream a(9, 3), b(9, 3), c(9, 4);
  const auto fa = OrthonormalComplementSample({}, 2, 2, a);
  const auto fb = OrthonormalComplementSample({}, 2, 2, b);
  const auto fc = OrthonormalComplementSample({}, 2, 2, c);
  EXPECT_EQ(fa, fb);
  EXPECT_NE(fa, fc);
}

TEST(OrthonormalComplementSample, RejectsOverflow) {
  RngStream rng(10, 0);
  const auto basis = OrthonormalComplementSample({}, 3, 5, rng);
  EXPECT_THROW(OrthonormalComplementSample(basis, 3, 5, rng), ContractViolation);
  EXPECT_NO_THROW(OrthonormalComplementSample(basis, 2, 5, rng));
}

TEST(OrthonormalComplementSample, FramesPassDefectCheck) {
  RngStream rng(11, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto basis = OrthonormalComplementSample({}, 4, 30, rng);
    auto all = basis;
    const auto frame = OrthonormalComplementSample(basis, 10, 30, rng);
    all.insert(all.end(), frame.begin(), frame.end());
    EXPECT_LE(OrthonormalityDefect(all), 1e-10);
  }
}

TEST(OrthonormalComplementSample, FirstCoordinateLooksHaar) {
  // For a uniform unit vector in R^d, E[v_1^2] = 1/d.
  RngStream rng(12, 0);
  const std::size_t d = 10, n = 20000;
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = OrthonormalComplementSample({}, 1, d, rng);
    sum += f[0][0] * f[0][0];
  }
  // Var(v_1^2) = 2(d-1)/(d^2(d+2)); five standard errors.
  const double se = std::sqrt(2.0 * (d - 1) / (d * d * (d + 2.0)) / n);
  EXPECT_NEAR(sum / n, 1.0 / d, 5 * se);
}

TEST(RngStream, SameKeySameSequence) {
  RngStream a(42, 7), b(42, 7), c(42, 8);
  for (int i = 0; i < 100; ++i) {
    const double x = a.Normal();
    EXPECT_EQ(x, b.Normal());
    (void)c;
  }
  RngStream d(42, 7), e(42, 8);
  EXPECT_NE(d.NextU64(), e.NextU64());
}

TEST(RngStream, DerivedStreamsAreStable) {
  const RngStream parent(5, 1);
  RngStream a = parent.Derive(3), b = parent.Derive(3), c = parent.Derive(4);
  EXPECT_EQ(a.NextU64(), b.NextU64());
  EXPECT_NE(parent.Derive(3).NextU64(), c.NextU64());
}

TEST(RngStream, BallPointsStayInBall) {
  RngStream rng(13, 0);
  double mean_norm = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const Vec p = rng.BallPoint(5, 0.7);
    EXPECT_LE(Norm(p), 0.7 + 1e-12);
    mean_norm += Norm(p) / 2000;
  }
  // E||p|| = d / (d + 1) * radius for the uniform ball.
  EXPECT_NEAR(mean_norm, 5.0 / 6.0 * 0.7, 0.01);
}

TEST(RngStream, UnitVectorsHaveUnitNorm) {
  RngStream rng(14, 0);
  for (int i = 0; i < 100; ++i) EXPECT_NEAR(Norm(rng.UnitVector(9)), 1.0, 1e-14);
}

TEST(Objectives, DistanceValueAndSubgradient) {
  DistanceObjective f(Vec{1.0, 0.0}, 2.0);
  const OracleAnswer a = f.Evaluate(Vec{1.0, 3.0});
  EXPECT_DOUBLE_EQ(a.value, 6.0);
  EXPECT_DOUBLE_EQ(a.gradient[0], 0.0);
  EXPECT_DOUBLE_EQ(a.gradient[1], 2.0);
  EXPECT_EQ(f.optimal_value(), 0.0);
}

TEST(Objectives, QuadraticGradientAndHessian) {
  QuadraticObjective g(Vec{1.0, -1.0}, 3.0);
  const OracleAnswer a = g.Evaluate(Vec{2.0, 1.0});
  EXPECT_DOUBLE_EQ(a.value, 1.5 * 5.0);
  EXPECT_DOUBLE_EQ(a.gradient[0], 3.0);
  EXPECT_DOUBLE_EQ(a.gradient[1], 6.0);
  const auto H = g.Hessian(Vec{0.0, 0.0});
  ASSERT_TRUE(H.has_value());
  EXPECT_DOUBLE_EQ(H->row(0)[0], 3.0);
  EXPECT_DOUBLE_EQ(H->row(0)[1], 0.0);
}

TEST(Objectives, DiagonalQuadraticSmoothnessIsLargestWeight) {
  DiagonalQuadraticObjective g(Vec{0.0, 0.0}, Vec{0.5, 4.0});
  EXPECT_DOUBLE_EQ(g.lipschitz(), 4.0);
  EXPECT_DOUBLE_EQ(g.Value(Vec{1.0, 1.0}), 0.5 * (0.5 + 4.0));
}

TEST(Objectives, BallPenaltyOnlyActsOutside) {
  auto inner = std::make_shared<LinearObjective>(Vec{1.0, 0.0});
  BallPenaltyObjective f(inner, 1.0, 2.0);
  EXPECT_DOUBLE_EQ(f.Value(Vec{0.5, 0.0}), 0.5);
  EXPECT_DOUBLE_EQ(f.Value(Vec{2.0, 0.0}), 2.0 + 2.0);
  const OracleAnswer a = f.Evaluate(Vec{-2.0, 0.0});
  EXPECT_DOUBLE_EQ(a.gradient[0], 1.0 - 2.0);
}

TEST(Errors, ExitCodesFollowExceptionType) {
  auto code = [](auto thrower) {
    try {
      thrower();
    } catch (...) {
      return ExitCodeForCurrentException();
    }
    return -1;
  };
  EXPECT_EQ(code([] { throw SchemaError("x"); }), kExitSchema);
  EXPECT_EQ(code([] { throw ContractViolation("x"); }), kExitContract);
  EXPECT_EQ(code([] { throw BudgetExceeded("x"); }), kExitBudget);
  EXPECT_EQ(code([] { throw std::runtime_error("x"); }), kExitFailure);
}

}  // namespace
}  // namespace parlab
