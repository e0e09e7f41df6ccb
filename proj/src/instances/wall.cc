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

#include "parlab/instances/wall.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "parlab/core/linalg.h"
#include "parlab/instances/sphere_box.h"
#include "parlab/simd/kernels.h"

namespace parlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Coordinates of x in the known frame and the residual off its span.
struct Split {
  Vec coords;
  Vec residual;
  double residual_norm = 0.0;
};

Split SplitAlong(const std::vector<Vec>& known, VecView x) {
  Split s;
  s.coords.resize(known.size());
  s.residual.assign(x.begin(), x.end());
  for (std::size_t j = 0; j < known.size(); ++j) {
    s.coords[j] = Dot(known[j], x);
    Axpy(-s.coords[j], known[j], s.residual);
  }
  s.residual_norm = Norm(s.residual);
  return s;
}

// Objective of the outer search at radius rho given the inner maximum.
double OuterValue(double rho, double inner, double alpha) {
  return -2.0 * alpha * std::pow(rho, 1.0 + alpha) +
         2.0 * (1.0 + alpha) * std::pow(rho, alpha - 1.0) * inner;
}

// Builds y* = sum_j u_j v_j + b * z / ||z|| and the gradient of h there.
void FillMaximizer(const std::vector<Vec>& known, const Split& split,
                   VecView frame_coords, double b,
                   WallEvaluation& out) {
  const std::size_t d = split.residual.size();
  out.y_star.assign(d, 0.0);
  for (std::size_t j = 0; j < frame_coords.size(); ++j) {
    Axpy(frame_coords[j], known[j], out.y_star);
  }
  if (split.residual_norm > 0.0 && b > 0.0) {
    Axpy(b / split.residual_norm, split.residual, out.y_star);
  }
}

}  // namespace

void ValidateWallParams(const WallParams& p) {
  if (!(p.delta_wall > 0.0) || !(p.delta_wall <= 1.0)) {
    throw std::invalid_argument("delta_wall must lie in (0, 1]");
  }
  if (!(p.alpha_wall > 0.0) || !(p.alpha_wall <= 1.0)) {
    throw std::invalid_argument("alpha_wall must lie in (0, 1]");
  }
  if (!(p.cone_threshold > 0.0) || !(p.cone_threshold < 1.0)) {
    throw std::invalid_argument("cone_threshold must lie in (0, 1)");
  }
}

double WallBlock(VecView y, double alpha) {
  return 2.0 * std::pow(Norm(y), 1.0 + alpha);
}

Vec WallBlockGradient(VecView y, double alpha) {
  const double n = Norm(y);
  Vec g(y.begin(), y.end());
  if (n == 0.0) {
    std::fill(g.begin(), g.end(), 0.0);
    return g;
  }
  Scale(2.0 * (1.0 + alpha) * std::pow(n, alpha - 1.0), g);
  return g;
}

double WallTangent(VecView y, VecView x, double alpha) {
  const double n = Norm(y);
  return -2.0 * alpha * std::pow(n, 1.0 + alpha) +
         2.0 * (1.0 + alpha) * Dot(y, x) * std::pow(n, alpha - 1.0);
}

WallEvaluation WallEvalReduced(const std::vector<Vec>& known,
                               const WallParams& params, VecView x) {
  ValidateWallParams(params);
  const double alpha = params.alpha_wall;
  const Split split = SplitAlong(known, x);
  const std::size_t i = known.size();

  // Unit-radius inner problem: the first i coordinates are capped by the cone
  // threshold, the residual direction is free.
  Vec weights = split.coords;
  weights.push_back(split.residual_norm);
  Vec caps(i, params.cone_threshold);
  caps.push_back(kInf);
  const SphereBoxResult unit = SphereBoxMaxCapped(weights, caps, 1.0);
  const double m = unit.value;

  const double rho = std::clamp(m, params.delta_wall, 1.0);
  WallEvaluation out;
  out.value = -2.0 * alpha * std::pow(rho, 1.0 + alpha) +
              2.0 * (1.0 + alpha) * std::pow(rho, alpha) * m;

  Vec frame(unit.coords.begin(), unit.coords.begin() + i);
  double a2 = 0.0;
  for (double& u : frame) {
    u *= rho;
    a2 += u * u;
  }
  out.a = std::sqrt(a2);
  out.b = rho * unit.coords[i];
  FillMaximizer(known, split, frame, out.b, out);
  // grad h(y*) when the residual is nonzero; otherwise the symmetric average
  // over residual directions, which drops the b-component.
  out.gradient = out.y_star;
  Scale(2.0 * (1.0 + alpha) * std::pow(rho, alpha - 1.0), out.gradient);
  // At x = 0 every point of the inner sphere is a maximizer and the feasible
  // set is symmetric, so 0 is a subgradient; it does not depend on `known`.
  if (m <= 0.0) std::fill(out.gradient.begin(), out.gradient.end(), 0.0);
  return out;
}

WallEvaluation WallEvalPolarGrid(const std::vector<Vec>& known,
                                 const WallParams& params, VecView x,
                                 const PolarGridOptions& options) {
  ValidateWallParams(params);
  const double alpha = params.alpha_wall;
  const Split split = SplitAlong(known, x);
  const double half_pi = std::numbers::pi / 2.0;

  auto eval = [&](double rho, double phi, double* a_out, double* b_out) {
    const double a = (phi >= half_pi) ? 0.0 : rho * std::cos(phi);
    const double b = rho * std::sin(phi);
    *a_out = a;
    *b_out = b;
    const SphereBoxResult sb =
        SphereBoxMax(split.coords, a, rho * params.cone_threshold);
    if (!sb.feasible()) return -kInf;
    return OuterValue(rho, sb.value + b * split.residual_norm, alpha);
  };

  double rho_lo = params.delta_wall, rho_hi = 1.0;
  double phi_lo = 0.0, phi_hi = half_pi;
  double best = -kInf, best_rho = rho_lo, best_phi = phi_hi;
  for (int pass = 0; pass <= options.refinement_passes; ++pass) {
    const std::size_t nr = options.radius_points, na = options.angle_points;
    for (std::size_t r = 0; r < nr; ++r) {
      const double rho =
          nr == 1 ? rho_lo : rho_lo + (rho_hi - rho_lo) * r / (nr - 1);
      for (std::size_t k = 0; k < na; ++k) {
        const double phi =
            na == 1 ? phi_lo : phi_lo + (phi_hi - phi_lo) * k / (na - 1);
        double a, b;
        const double val = eval(rho, phi, &a, &b);
        if (val > best) {
          best = val;
          best_rho = rho;
          best_phi = phi;
        }
      }
    }
    const double half_r = (rho_hi - rho_lo) / (2.0 * options.shrink);
    const double half_a = (phi_hi - phi_lo) / (2.0 * options.shrink);
    rho_lo = std::max(params.delta_wall, best_rho - half_r);
    rho_hi = std::min(1.0, best_rho + half_r);
    phi_lo = std::max(0.0, best_phi - half_a);
    phi_hi = std::min(half_pi, best_phi + half_a);
  }

  WallEvaluation out;
  out.value = best;
  double a, b;
  eval(best_rho, best_phi, &a, &b);
  out.a = a;
  out.b = b;
  const SphereBoxResult sb =
      SphereBoxMax(split.coords, a, best_rho * params.cone_threshold);
  Vec frame = sb.coords;
  frame.resize(known.size(), 0.0);
  FillMaximizer(known, split, frame, b, out);
  out.gradient = out.y_star;
  Scale(2.0 * (1.0 + alpha) * std::pow(best_rho, alpha - 1.0), out.gradient);
  return out;
}

BruteForceWall WallEvalBruteforce(const std::vector<Vec>& vectors,
                                  const WallParams& params, VecView x,
                                  std::size_t sample_count, RngStream& rng) {
  ValidateWallParams(params);
  const std::size_t d = x.size();
  const double inner_vol = std::pow(params.delta_wall, static_cast<double>(d));
  const std::size_t chunk = 4096;
  BruteForceWall out;
  out.value = -kInf;

  RowMatrix rows(chunk, d);
  Vec norms(chunk);
  std::vector<unsigned char> keep(chunk);
  Vec proj(chunk);
  const auto& kernels = simd::Kernels();

  for (std::size_t done = 0; done < sample_count; done += chunk) {
    const std::size_t n = std::min(chunk, sample_count - done);
    for (std::size_t s = 0; s < n; ++s) {
      MutVecView y = rows.row(s);
      rng.FillNormal(y);
      const double g = Norm(y);
      const double radius = std::pow(
          inner_vol + rng.Uniform() * (1.0 - inner_vol), 1.0 / d);
      Scale(radius / g, y);
      norms[s] = radius;
      keep[s] = 1;
    }
    for (const Vec& v : vectors) {
      kernels.row_dots(rows.data(), n, d, v.data(), proj.data());
      for (std::size_t s = 0; s < n; ++s) {
        if (std::abs(proj[s]) >= params.cone_threshold * norms[s]) keep[s] = 0;
      }
    }
    for (std::size_t s = 0; s < n; ++s) out.accepted += keep[s];
    std::size_t arg = n;
    const double best = kernels.tangent_max(rows.data(), norms.data(),
                                            keep.data(), n, d, x.data(),
                                            params.alpha_wall, &arg);
    if (best > out.value) {
      out.value = best;
      VecView r = rows.row(arg);
      out.y_best.assign(r.begin(), r.end());
    }
  }
  return out;
}

bool ConeMembership(VecView v, VecView x, double threshold) {
  const double n = Norm(x);
  if (n == 0.0) return false;
  return std::abs(Dot(v, x)) >= threshold * n * (1.0 - 1e-12);
}

}  // namespace parlab
