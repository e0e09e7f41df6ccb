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

#include "parlab/instances/sphere_box.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace parlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelTol = 1e-12;

double Sign(double w) { return w < 0.0 ? -1.0 : 1.0; }

// Spreads `remaining` squared norm over the listed coordinates, each capped,
// as evenly as the caps allow.
void SpreadEvenly(const std::vector<std::size_t>& idx, VecView caps,
                  double remaining, Vec& u) {
  std::vector<std::size_t> order = idx;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return caps[a] < caps[b]; });
  std::size_t left = order.size();
  for (std::size_t k = 0; k < order.size(); ++k, --left) {
    const double share = std::sqrt(std::max(0.0, remaining) / left);
    const double v = std::min(caps[order[k]], share);
    u[order[k]] = v;
    remaining -= v * v;
  }
}

double CappedNormSq(VecView w, VecView caps, double nu) {
  double s = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0.0) continue;
    const double v = std::min(caps[j], std::abs(w[j]) / nu);
    s += v * v;
  }
  return s;
}

}  // namespace

bool SphereBoxResult::feasible() const { return value > -kInf; }

SphereBoxResult SphereBoxMaxCapped(VecView w, VecView caps, double a) {
  if (!(a >= 0.0)) throw std::invalid_argument("sphere-box radius must be >= 0");
  if (caps.size() != w.size()) throw std::invalid_argument("caps size mismatch");
  for (double c : caps) {
    if (!(c >= 0.0)) throw std::invalid_argument("sphere-box cap must be >= 0");
  }
  SphereBoxResult out;
  if (a == 0.0) return out;
  const std::size_t n = w.size();
  const double a2 = a * a;

  double cap_total = 0.0;
  for (double c : caps) cap_total += c * c;
  if (n == 0 || a2 > cap_total * (1.0 + kRelTol)) {
    out.value = -kInf;
    return out;
  }

  out.coords.assign(n, 0.0);
  std::vector<std::size_t> active, idle;
  double active_cap = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (w[j] != 0.0) {
      active.push_back(j);
      active_cap += caps[j] * caps[j];
    } else {
      idle.push_back(j);
    }
  }

  if (active_cap <= a2) {
    // Every weighted coordinate sits at its cap; the rest of the norm goes to
    // coordinates that do not affect the value.
    for (std::size_t j : active) out.coords[j] = Sign(w[j]) * caps[j];
    SpreadEvenly(idle, caps, a2 - active_cap, out.coords);
  } else {
    double wnorm = 0.0;
    for (double v : w) wnorm += v * v;
    wnorm = std::sqrt(wnorm);
    double hi = wnorm / a;  // capped norm <= a^2 here
    double lo = hi;
    while (CappedNormSq(w, caps, lo) < a2) lo *= 0.5;
    for (int it = 0; it < 200 && hi - lo > kRelTol * hi * 1e-3; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (CappedNormSq(w, caps, mid) >= a2) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double nu = 0.5 * (lo + hi);
    // Exact multiplier for the uncapped set, then rescale it to hit a exactly.
    double capped_sq = 0.0;
    double free_sq = 0.0;
    for (std::size_t j : active) {
      const double raw = std::abs(w[j]) / nu;
      if (raw >= caps[j]) {
        out.coords[j] = Sign(w[j]) * caps[j];
        capped_sq += caps[j] * caps[j];
      } else {
        out.coords[j] = w[j] / nu;
        free_sq += out.coords[j] * out.coords[j];
      }
    }
    const double rest = a2 - capped_sq;
    if (free_sq > 0.0 && rest > 0.0) {
      const double scale = std::sqrt(rest / free_sq);
      bool within_caps = true;
      for (std::size_t j : active) {
        if (std::abs(w[j]) / nu < caps[j] &&
            std::abs(out.coords[j]) * scale > caps[j]) {
          within_caps = false;
        }
      }
      if (within_caps) {
        for (std::size_t j : active) {
          if (std::abs(w[j]) / nu < caps[j]) out.coords[j] *= scale;
        }
      }
    }
  }
  out.value = 0.0;
  for (std::size_t j = 0; j < n; ++j) out.value += w[j] * out.coords[j];
  return out;
}

SphereBoxResult SphereBoxMax(VecView w, double a, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("sphere-box cap must be >= 0");
  const Vec caps(w.size(), t);
  return SphereBoxMaxCapped(w, caps, a);
}

}  // namespace parlab
