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

// Seeded generators for lattices, spaces and function families.
//
// Streams depend only on the seed: the engine is mt19937_64 and bounded
// draws use rejection sampling instead of standard distributions, whose
// output is implementation-defined.

#ifndef WALLMAN_RANDOM_MODELS_HPP_
#define WALLMAN_RANDOM_MODELS_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "wallman/aa_certifier.hpp"
#include "wallman/json_io.hpp"

namespace wallman {

class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform on [lo, hi].
  int range(int lo, int hi);
  bool coin() { return (next() >> 63) != 0; }
  /// k / denominator with k uniform on [-denominator, denominator].
  Rational dyadic(int denominator);

 private:
  std::mt19937_64 engine_;
};

struct ModelSizes {
  /// Site counts of generated ground spaces.
  int min_sites = 2;
  int max_sites = 8;
  int min_generators = 1;
  int max_generators = 5;
  int max_functions = 32;
};

/// Finite(n) or an ℕ model with period ≤ 3, with site count in range.
GroundSpace random_ground(Rng& rng, const ModelSizes& sizes);
LatticeElement random_element(Rng& rng, const GroundSpace& space);
LatticeSpec random_lattice_spec(Rng& rng, const ModelSizes& sizes);

/// Constant on every atom (ignoring prefix points of infinite atoms), free
/// elsewhere, so every ultrafilter limit exists. Values are k / denominator.
BoundedFunction random_limit_function(Rng& rng, const WallmanSpace& space,
                                      int denominator = 8);

/// Γ⁻¹ of a random limit table.
BoundedFunction random_measurable_function(Rng& rng, const WallmanSpace& space,
                                           int denominator = 8);

/// Clustered members: random centres plus small perturbations.
ExactFamily random_family(Rng& rng, const WallmanSpace& space,
                          const ModelSizes& sizes);

}  // namespace wallman

#endif  // WALLMAN_RANDOM_MODELS_HPP_
