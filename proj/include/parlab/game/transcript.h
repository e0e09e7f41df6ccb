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

#ifndef PARLAB_GAME_TRANSCRIPT_H_
#define PARLAB_GAME_TRANSCRIPT_H_

#include <istream>
#include <ostream>

#include "parlab/game/game.h"

namespace parlab {

// One JSON object per round with keys t, queries, values, gradients,
// branches, frame, frame_digest and precondition_violations, followed by a
// final record {"final": true, params, seed, Q, committed}. All doubles are
// hex floats.
void WriteTranscriptJsonl(std::ostream& os, const GameTranscript& transcript);

// Throws SchemaError on malformed input or a frame digest mismatch.
GameTranscript ReadTranscriptJsonl(std::istream& is);

}  // namespace parlab

#endif  // PARLAB_GAME_TRANSCRIPT_H_
