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

#include <gtest/gtest.h>

#include "parlab/core/linalg.h"
#include "parlab/core/rng.h"
#include "parlab/instances/wall.h"

namespace parlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Vec> Axes(std::size_t d, std::size_t count) {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < count; ++j) {
    Vec e(d, 0.0);
    e[j] = 1.0;
    out.push_back(e);
  }
  return out;
}

// Exhaustive scan of the wall in R^3 with one known axis e1: spherical grid
// over the annulus delta <= |y| <= 1, excluding the cone around e1.
double DenseWall3(const WallParams& p, VecView x) {
  double best = -kInf;
  const int nr = 120, nt = 360, np = 180;
  for (int r = 0; r < nr; ++r) {
    const double rho = p.delta_wall + (1.0 - p.delta_wall) * r / (nr - 1);
    std::vector<double> thetas;
    for (int it = 0; it <= nt; ++it) thetas.push_back(std::numbers::pi * it / nt);
    // Maximizers often sit on the cone boundary; include it exactly.
    thetas.push_back(std::acos(p.cone_threshold) + 1e-12);
    thetas.push_back(std::acos(-p.cone_threshold) - 1e-12);
    for (double theta : thetas) {  // angle from e1
      if (std::abs(std::cos(theta)) >= p.cone_threshold) continue;
      for (int ip = 0; ip < np; ++ip) {
        const double phi = 2 * std::numbers::pi * ip / np;
        const Vec y = {rho * std::cos(theta), rho * std::sin(theta) * std::cos(phi),
                       rho * std::sin(theta) * std::sin(phi)};
        best = std::max(best, WallTangent(y, x, p.alpha_wall));
      }
    }
  }
  return best;
}

TEST(Wall, ValueAtOrigin) {
  const WallParams p{0.25, 0.5, 0.3};
  for (std::size_t i = 0; i <= 3; ++i) {
    const WallEvaluation w = WallEvalReduced(Axes(6, i), p, Zeros(6));
    EXPECT_NEAR(w.value, -2 * 0.5 * std::pow(0.25, 1.5), 1e-15);
    for (double g : w.gradient) EXPECT_EQ(g, 0.0);
  }
}

TEST(Wall, MatchesDenseScanInThreeDimensions) {
  const WallParams p{0.25, 0.5, 0.3};
  RngStream rng(31, 0);
  for (int trial = 0; trial < 8; ++trial) {
    const Vec x = rng.BallPoint(3, 1.0);
    const double closed = WallEvalReduced(Axes(3, 1), p, x).value;
    const double scan = DenseWall3(p, x);
    // Grid spacing is a few milliradians, so the scan is a lower bound.
    EXPECT_GE(closed, scan - 1e-9) << trial;
    EXPECT_NEAR(closed, scan, 2e-3) << trial;
  }
}

TEST(Wall, MatchesPolarGrid) {
  const WallParams p{0.25, 0.5, 0.3};
  RngStream rng(32, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 10, i = 1 + trial % 4;
    const Vec x = rng.BallPoint(d, 1.0);
    const WallEvaluation closed = WallEvalReduced(Axes(d, i), p, x);
    const WallEvaluation grid = WallEvalPolarGrid(Axes(d, i), p, x);
    EXPECT_GE(closed.value, grid.value - 1e-9);
    EXPECT_NEAR(closed.value, grid.value, 1e-4);
  }
}

TEST(Wall, MaximizerIsFeasibleAndAttainsValue) {
  const WallParams p{0.25, 0.5, 0.3};
  RngStream rng(33, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 12, i = trial % 5;
    const Vec x = rng.BallPoint(d, 1.0);
    const auto known = Axes(d, i);
    const WallEvaluation w = WallEvalReduced(known, p, x);
    const double n = Norm(w.y_star);
    if (Norm(x) == 0.0) continue;
    EXPECT_GE(n, p.delta_wall - 1e-12);
    EXPECT_LE(n, 1.0 + 1e-12);
    for (const Vec& v : known) {
      EXPECT_LE(std::abs(Dot(v, w.y_star)), p.cone_threshold * n * (1 + 1e-9));
    }
    EXPECT_NEAR(WallTangent(w.y_star, x, p.alpha_wall), w.value, 1e-12);
  }
}

TEST(Wall, ResidualOnlyLowerBound) {
  const WallParams p{0.2, 1 / std::log2(5.0), 0.25};
  RngStream rng(34, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 8, i = 1 + trial % 3;
    const auto known = Axes(d, i);
    const Vec x = rng.BallPoint(d, 1.0);
    const double z = Norm(ProjectComplement(known, x));
    const double rho = std::clamp(z, p.delta_wall, 1.0);
    const double a = p.alpha_wall;
    const double bound = -2 * a * std::pow(rho, 1 + a) + 2 * (1 + a) * std::pow(rho, a) * z;
    EXPECT_GE(WallEvalReduced(known, p, x).value, bound - 1e-12);
    if (z >= p.delta_wall) {
      EXPECT_GE(WallEvalReduced(known, p, x).value, z - 1e-12);
    }
  }
}

TEST(Wall, IndependentOfUnknownDirections) {
  // Adding a component along an unknown direction only changes the residual
  // norm; rotating the residual leaves the value unchanged.
  const WallParams p{0.25, 0.5, 0.3};
  RngStream rng(35, 0);
  const auto known = Axes(8, 2);
  for (int trial = 0; trial < 50; ++trial) {
    Vec x = rng.BallPoint(8, 0.9);
    Vec y = x;
    // Rotate coordinates 2..7 cyclically.
    for (std::size_t j = 2; j < 8; ++j) y[j] = x[2 + (j - 2 + 1) % 6];
    const WallEvaluation wx = WallEvalReduced(known, p, x);
    const WallEvaluation wy = WallEvalReduced(known, p, y);
    EXPECT_NEAR(wx.value, wy.value, 1e-13);
    EXPECT_NEAR(wx.a, wy.a, 1e-13);
    EXPECT_NEAR(wx.b, wy.b, 1e-13);
  }
}

TEST(Wall, GradientMatchesFiniteDifferences) {
  const WallParams p{0.25, 0.5, 0.3};
  RngStream rng(36, 0);
  const auto known = Axes(6, 2);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec x = rng.BallPoint(6, 1.0);
    const WallEvaluation w = WallEvalReduced(known, p, x);
    const double h = 1e-6;
    for (std::size_t j = 0; j < 6; ++j) {
      Vec xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      const double fd = (WallEvalReduced(known, p, xp).value -
                         WallEvalReduced(known, p, xm).value) / (2 * h);
      EXPECT_NEAR(fd, w.gradient[j], 1e-5) << "trial " << trial << " coord " << j;
    }
  }
}

TEST(Wall, BlockGradientMatchesFiniteDifferences) {
  RngStream rng(37, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec y = rng.BallPoint(5, 1.0);
    const Vec g = WallBlockGradient(y, 0.4);
    for (std::size_t j = 0; j < 5; ++j) {
      Vec yp = y, ym = y;
      yp[j] += 1e-6;
      ym[j] -= 1e-6;
      EXPECT_NEAR((WallBlock(yp, 0.4) - WallBlock(ym, 0.4)) / 2e-6, g[j], 1e-6);
    }
  }
  for (double g : WallBlockGradient(Zeros(3), 0.4)) EXPECT_EQ(g, 0.0);
}

TEST(Wall, ConvexWithValidSubgradients) {
  const WallParams p{0.25, 0.5, 0.3};
  RngStream rng(38, 0);
  const auto known = Axes(10, 3);
  for (int k = 0; k < 1000; ++k) {
    const Vec x1 = rng.BallPoint(10, 1.0), x2 = rng.BallPoint(10, 1.0);
    const double th = rng.Uniform();
    const WallEvaluation w1 = WallEvalReduced(known, p, x1);
    const WallEvaluation w2 = WallEvalReduced(known, p, x2);
    const double mid = WallEvalReduced(known, p, Combine(th, x1, 1 - th, x2)).value;
    EXPECT_LE(mid, th * w1.value + (1 - th) * w2.value + 1e-10);
    EXPECT_GE(w2.value, w1.value + Dot(w1.gradient, Sub(x2, x1)) - 1e-10);
  }
}

TEST(Wall, BruteForceIsALowerBoundThatConverges) {
  const WallParams p{0.3, 1 / std::log2(1 / 0.3), 0.45};
  RngStream rng(39, 0);
  const std::size_t d = 4;
  const auto known = Axes(d, 1);
  for (int trial = 0; trial < 3; ++trial) {
    const Vec x = rng.BallPoint(d, 1.0);
    const double closed = WallEvalReduced(known, p, x).value;
    RngStream samples(40, trial);
    const BruteForceWall bf = WallEvalBruteforce(known, p, x, 200000, samples);
    EXPECT_GT(bf.accepted, 0u);
    EXPECT_LE(bf.value, closed + 1e-12);
    EXPECT_GE(bf.value, closed - 0.05);
  }
}

TEST(Wall, RejectsBadParameters) {
  EXPECT_THROW(WallEvalReduced({}, WallParams{0.0, 0.5, 0.3}, Zeros(2)),
               std::invalid_argument);
  EXPECT_THROW(WallEvalReduced({}, WallParams{0.25, 1.5, 0.3}, Zeros(2)),
               std::invalid_argument);
  EXPECT_THROW(WallEvalReduced({}, WallParams{0.25, 0.5, 1.0}, Zeros(2)),
               std::invalid_argument);
}

}  // namespace
}  // namespace parlab
