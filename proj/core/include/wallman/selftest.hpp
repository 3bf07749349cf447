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

// Randomized invariant suites. Each suite draws from its own stream of the
// seed, so suites can run alone and still see the same models.

#ifndef WALLMAN_SELFTEST_HPP_
#define WALLMAN_SELFTEST_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wallman/json_io.hpp"
#include "wallman/random_models.hpp"

namespace wallman {

struct SelftestConfig {
  std::uint64_t seed = 42;
  ModelSizes sizes;
  int lattices = 200;
  int families = 200;
  int function_pairs = 2000;
  int numeric_cases = 20;
};

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  /// At most kMaxCounterexamples entries.
  std::vector<Json> counterexamples;

  bool passed() const { return failures == 0; }
};

inline constexpr std::size_t kMaxCounterexamples = 8;

/// Power-set lattices of Finite(n): n principal points, t ∈ U ⟺ 𝒫_t ∈ U⋆,
/// and U ↦ U⋆ is a bijection preserving ∩ and ∪.
SuiteResult suite_power_set(const SelftestConfig& config);
/// Closure, atoms and bit-pattern round trips.
SuiteResult suite_lattice(const SelftestConfig& config);
/// Ultrafilters against the filter axioms and atom count.
SuiteResult suite_filters(const SelftestConfig& config);
/// ⋆ preserves ∩, ∪ and inclusion for every pair of opens.
SuiteResult suite_star(const SelftestConfig& config);
/// Density, compactness and Hausdorff on atom-separating spaces.
SuiteResult suite_topology(const SelftestConfig& config);
/// Principal limits, the near-set property and linearity of limits.
SuiteResult suite_ultralimits(const SelftestConfig& config);
/// d₁ ≤ d₂ ≤ 3·d₁ and Γ⁻¹∘Γ = id.
SuiteResult suite_continuity(const SelftestConfig& config);
/// Both directions of the exact cross-check, plus monotonicity in ε.
SuiteResult suite_aa_cross_check(const SelftestConfig& config);
/// AA2 at principal ultrafilters agrees with the discrete modulus condition.
SuiteResult suite_principal_reduction(const SelftestConfig& config);
/// Sampled scalar families: oracle covering counts and KP3-to-(P) transfer.
SuiteResult suite_numeric(const SelftestConfig& config);

struct SelftestReport {
  SelftestConfig config;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

SelftestReport run_selftest(const SelftestConfig& config);
Json selftest_json(const SelftestReport& report);

}  // namespace wallman

#endif  // WALLMAN_SELFTEST_HPP_
