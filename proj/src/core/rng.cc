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

#include "parlab/core/rng.h"

#include <cmath>

namespace parlab {

std::uint64_t MixKey(std::uint64_t a, std::uint64_t b) {
  // splitmix64 finalizer over a combined word.
  std::uint64_t z = a * 0x9E3779B97F4A7C15ULL + b + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

std::mt19937_64 MakeEngine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(MakeEngine(seed, stream)) {}

double RngStream::Normal() { return normal_(engine_); }

double RngStream::Uniform() { return uniform_(engine_); }

void RngStream::FillNormal(MutVecView out) {
  for (double& v : out) v = normal_(engine_);
}

Vec RngStream::NormalVector(std::size_t d) {
  Vec v(d);
  FillNormal(v);
  return v;
}

Vec RngStream::UnitVector(std::size_t d) {
  while (true) {
    Vec v = NormalVector(d);
    double n2 = 0.0;
    for (double x : v) n2 += x * x;
    if (n2 > 1e-300) {
      const double inv = 1.0 / std::sqrt(n2);
      for (double& x : v) x *= inv;
      return v;
    }
  }
}

Vec RngStream::BallPoint(std::size_t d, double radius) {
  Vec v = UnitVector(d);
  const double r = radius * std::pow(Uniform(), 1.0 / static_cast<double>(d));
  for (double& x : v) x *= r;
  return v;
}

RngStream RngStream::Derive(std::uint64_t sub) const {
  return RngStream(seed_, MixKey(stream_, sub));
}

}  // namespace parlab
