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


#include <benchmark/benchmark.h>

#include <vector>

#include "wallman/filters.hpp"
#include "wallman/json_io.hpp"
#include "wallman/random_models.hpp"
#include "wallman/wallman_space.hpp"

namespace wallman {
namespace {

// Fixed specs per site count so that every iteration does the same work.
std::vector<LatticeSpec> specs(int sites, int count) {
  Rng rng(7, static_cast<std::uint64_t>(sites));
  ModelSizes sizes;
  sizes.min_sites = sizes.max_sites = sites;
  std::vector<LatticeSpec> out;
  for (int i = 0; i < count; ++i) out.push_back(random_lattice_spec(rng, sizes));
  return out;
}

void BM_GenerateLattice(benchmark::State& state) {
  const auto inputs = specs(static_cast<int>(state.range(0)), 64);
  for (auto _ : state) {
    for (const auto& spec : inputs) benchmark::DoNotOptimize(build_lattice(spec).size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(inputs.size()));
}
BENCHMARK(BM_GenerateLattice)->DenseRange(2, 8, 2);

void BM_EnumerateUltrafilters(benchmark::State& state) {
  std::vector<ZeroSetLattice> lattices;
  for (const auto& spec : specs(static_cast<int>(state.range(0)), 64)) lattices.push_back(build_lattice(spec));
  for (auto _ : state) {
    for (const auto& lattice : lattices) benchmark::DoNotOptimize(enumerate_ultrafilters(lattice).size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lattices.size()));
}
BENCHMARK(BM_EnumerateUltrafilters)->DenseRange(2, 8, 2);

void BM_StarIdentitiesPowerSet(benchmark::State& state) {
  const WallmanSpace space =
      WallmanSpace::build(power_set_lattice(GroundSpace::finite(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_star_identities(space).pairs_checked);
}
BENCHMARK(BM_StarIdentitiesPowerSet)->DenseRange(4, 8, 2);

}  // namespace
}  // namespace wallman
