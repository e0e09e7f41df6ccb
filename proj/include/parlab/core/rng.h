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

#ifndef PARLAB_CORE_RNG_H_
#define PARLAB_CORE_RNG_H_

#include <cstdint>
#include <random>

#include "parlab/core/types.h"

namespace parlab {

// Deterministic random stream keyed by (seed, stream id). Two streams with the
// same key produce the same sequence; different ids give independent streams.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  double Normal();
  double Uniform();  // [0, 1)
  std::uint64_t NextU64() { return engine_(); }

  void FillNormal(MutVecView out);
  Vec NormalVector(std::size_t d);
  // Uniform on the unit sphere in R^d.
  Vec UnitVector(std::size_t d);
  // Uniform in the ball of the given radius in R^d.
  Vec BallPoint(std::size_t d, double radius);

  // Child stream with a derived key. Useful for per-call substreams.
  RngStream Derive(std::uint64_t sub) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

// Stable 64-bit mix used to derive stream ids from labels and indices.
std::uint64_t MixKey(std::uint64_t a, std::uint64_t b);

}  // namespace parlab

#endif  // PARLAB_CORE_RNG_H_
