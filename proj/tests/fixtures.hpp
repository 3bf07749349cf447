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

#ifndef WALLMAN_TESTS_FIXTURES_HPP_
#define WALLMAN_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "wallman/ground_lattice.hpp"
#include "wallman/rational.hpp"
#include "wallman/ultralimits.hpp"
#include "wallman/wallman_space.hpp"

namespace wallman::testing {

/// ℕ with period 2 and `prefix` explicit points.
inline GroundSpace parity_ground(int prefix = 0) {
  return GroundSpace::natural(2, prefix);
}

inline LatticeElement evens(const GroundSpace& g) { return g.parse("", "10"); }
inline LatticeElement odds(const GroundSpace& g) { return g.parse("", "01"); }

/// {∅, evens, odds, ℕ}.
inline ZeroSetLattice parity_lattice(int prefix = 0) {
  const GroundSpace g = parity_ground(prefix);
  const std::vector<LatticeElement> gens{evens(g), odds(g)};
  return generate_lattice(g, gens);
}

inline WallmanSpace parity_space(int prefix = 0) {
  return WallmanSpace::build(parity_lattice(prefix));
}

inline WallmanSpace power_set_space(int n) {
  return WallmanSpace::build(power_set_lattice(GroundSpace::finite(n)));
}

inline std::size_t index_of(const ZeroSetLattice& lattice, const LatticeElement& e) {
  return lattice.index_of(e).value();
}

inline std::size_t open_index(const WallmanSpace& space, const LatticeElement& open) {
  const auto opens = space.opens();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    if (opens[i] == open) return i;
  }
  return opens.size();
}

inline Rational q(long num, long den = 1) { return Rational(num, den); }

/// Eventual value per residue, no explicit prefix values.
inline BoundedFunction parity_function(const GroundSpace& g, const Rational& even,
                                       const Rational& odd) {
  return BoundedFunction::natural(g, {}, std::map<int, Rational>{{0, even}, {1, odd}});
}

}  // namespace wallman::testing

#endif  // WALLMAN_TESTS_FIXTURES_HPP_
