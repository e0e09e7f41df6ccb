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

#include "parlab/core/linalg.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "parlab/core/errors.h"
#include "parlab/simd/kernels.h"

namespace parlab {

double Dot(VecView a, VecView b) {
  return simd::Dot(a.data(), b.data(), std::min(a.size(), b.size()));
}

double Norm(VecView a) { return std::sqrt(Dot(a, a)); }

double Distance(VecView a, VecView b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double t = a[i] - b[i];
    s += t * t;
  }
  return std::sqrt(s);
}

void Axpy(double a, VecView x, MutVecView y) {
  simd::Axpy(a, x.data(), y.data(), std::min(x.size(), y.size()));
}

void Scale(double a, MutVecView x) {
  for (double& v : x) v *= a;
}

Vec Sub(VecView a, VecView b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec Add(VecView a, VecView b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec Combine(double a, VecView x, double b, VecView y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

Vec Zeros(std::size_t d) { return Vec(d, 0.0); }

double OrthonormalityDefect(const std::vector<Vec>& basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      const double target = (i == j) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(Dot(basis[i], basis[j]) - target));
    }
  }
  return worst;
}

Vec ProjectSpan(const std::vector<Vec>& basis, VecView x, double tol) {
  const double defect = OrthonormalityDefect(basis);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "basis is not orthonormal: defect " << defect << " exceeds " << tol;
    throw ContractViolation(msg.str());
  }
  Vec out(x.size(), 0.0);
  for (const Vec& b : basis) Axpy(Dot(b, x), b, out);
  return out;
}

Vec ProjectComplement(const std::vector<Vec>& basis, VecView x, double tol) {
  Vec p = ProjectSpan(basis, x, tol);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = x[i] - p[i];
  return p;
}

std::vector<Vec> OrthonormalComplementSample(const std::vector<Vec>& basis,
                                             std::size_t count, std::size_t d,
                                             RngStream& rng) {
  if (basis.size() + count > d) {
    std::ostringstream msg;
    msg << "cannot draw " << count << " orthonormal vectors from a "
        << (d - std::min(d, basis.size())) << "-dimensional complement";
    throw ContractViolation(msg.str());
  }
  std::vector<Vec> all = basis;
  std::vector<Vec> out;
  out.reserve(count);
  while (out.size() < count) {
    Vec g = rng.NormalVector(d);
    const double raw = Norm(g);
    // Two passes of Gram-Schmidt keep the defect near machine precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& b : all) Axpy(-Dot(b, g), b, g);
    }
    const double n = Norm(g);
    if (n < 1e-8 * std::max(1.0, raw)) continue;
    Scale(1.0 / n, g);
    all.push_back(g);
    out.push_back(std::move(g));
  }
  return out;
}

void ProjectBall(MutVecView x, double radius) {
  const double n = Norm(x);
  if (n > radius) Scale(radius / n, x);
}

}  // namespace parlab
