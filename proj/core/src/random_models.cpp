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

#include "wallman/random_models.hpp"

#include <algorithm>
#include <limits>

#include "wallman/error.hpp"
#include "wallman/filters.hpp"

namespace wallman {

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % n;
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::dyadic(int denominator) {
  return Rational(range(-denominator, denominator), denominator);
}

GroundSpace random_ground(Rng& rng, const ModelSizes& sizes) {
  if (sizes.min_sites < 1 || sizes.max_sites < sizes.min_sites ||
      sizes.max_sites > 64) {
    throw Error(ErrorCode::kInvalidConfig, "site range must lie in 1..64");
  }
  const int sites = rng.range(sizes.min_sites, sizes.max_sites);
  if (rng.coin()) return GroundSpace::finite(sites);
  const int period = rng.range(1, std::min(3, sites));
  return GroundSpace::natural(period, sites - period);
}

LatticeElement random_element(Rng& rng, const GroundSpace& space) {
  const LatticeElement full = space.full_set();
  const std::uint64_t head = rng.next() & full.head;
  const std::uint64_t tail = rng.next() & full.tail;
  return {head, tail};
}

LatticeSpec random_lattice_spec(Rng& rng, const ModelSizes& sizes) {
  LatticeSpec spec;
  spec.space = random_ground(rng, sizes);
  const int count = rng.range(sizes.min_generators, sizes.max_generators);
  for (int i = 0; i < count; ++i) spec.generators.push_back(random_element(rng, spec.space));
  return spec;
}

BoundedFunction random_limit_function(Rng& rng, const WallmanSpace& space,
                                      int denominator) {
  const GroundSpace& ground = space.space();
  std::vector<Rational> values(static_cast<std::size_t>(ground.site_count()));
  for (auto& v : values) v = rng.dyadic(denominator);
  for (const auto& atom : atoms(space.lattice())) {
    const Rational v = rng.dyadic(denominator);
    for (int s : ground.sites_of(atom)) {
      if (atom.infinite() && !ground.is_residue_site(s)) continue;
      values[static_cast<std::size_t>(s)] = v;
    }
  }
  return BoundedFunction(ground, std::move(values));
}

BoundedFunction random_measurable_function(Rng& rng, const WallmanSpace& space,
                                           int denominator) {
  UltraLimitTable table;
  for (std::size_t k = 0; k < space.points().size(); ++k) {
    table.limits.push_back(rng.dyadic(denominator));
  }
  return gamma_inverse(table, space);
}

ExactFamily random_family(Rng& rng, const WallmanSpace& space,
                          const ModelSizes& sizes) {
  ExactFamily family;
  const int members = rng.range(1, std::max(1, sizes.max_functions));
  if (rng.coin()) {
    for (int i = 0; i < members; ++i) {
      family.functions.push_back(random_limit_function(rng, space));
    }
    family.label = "scattered";
    return family;
  }
  std::vector<BoundedFunction> centres;
  const int count = rng.range(1, 4);
  for (int i = 0; i < count; ++i) centres.push_back(random_limit_function(rng, space));
  const Rational scale(1, 8);
  for (int i = 0; i < members; ++i) {
    const auto& c = centres[rng.below(centres.size())];
    family.functions.push_back(c + scale * random_limit_function(rng, space));
  }
  family.label = "clustered";
  return family;
}

}  // namespace wallman
