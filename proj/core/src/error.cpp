// Copyright 2026 The Wallman Authors
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

#include "wallman/error.hpp"

namespace wallman {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidSpace: return "InvalidSpace";
    case ErrorCode::kGeneratorNotInSpace: return "GeneratorNotInSpace";
    case ErrorCode::kTooManyGenerators: return "TooManyGenerators";
    case ErrorCode::kLatticeTooLarge: return "LatticeTooLarge";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kNotMaximal: return "NotMaximal";
    case ErrorCode::kEmptyIntersection: return "EmptyIntersection";
    case ErrorCode::kComplementNotInLattice: return "ComplementNotInLattice";
    case ErrorCode::kAmbiguousLimit: return "AmbiguousLimit";
    case ErrorCode::kGridTooCoarse: return "GridTooCoarse";
    case ErrorCode::kNoTails: return "NoTails";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace wallman
