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

#ifndef WALLMAN_WALLMAN_SPACE_HPP_
#define WALLMAN_WALLMAN_SPACE_HPP_

#include <bitset>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wallman/filters.hpp"
#include "wallman/ground_lattice.hpp"

namespace wallman {

/// A set of ultrafilter indices. Atoms are disjoint and nonempty, so a space
/// never has more ultrafilters than sites.
using IndexSet = std::bitset<kMaxSites>;

enum class StarMode {
  /// U⋆ is decided through the core for any representable U.
  kLenient,
  /// T∖U must be a lattice element; anything else is an error.
  kStrict,
};

struct StarSet {
  LatticeElement open;
  IndexSet members;
};

/// The ultrafilters of a lattice together with the ⋆-images of a finite open
/// family. Unless given explicitly the opens are the complements of the
/// lattice elements, which is the standard Wallman base.
class WallmanSpace {
 public:
  static WallmanSpace build(
      ZeroSetLattice lattice,
      std::optional<std::vector<LatticeElement>> opens = std::nullopt,
      StarMode mode = StarMode::kLenient);

  const ZeroSetLattice& lattice() const { return lattice_; }
  const GroundSpace& space() const { return lattice_.space(); }
  std::span<const Ultrafilter> points() const { return points_; }
  std::span<const LatticeElement> opens() const { return opens_; }
  const IndexSet& base_set(std::size_t open_index) const {
    return base_sets_[open_index];
  }
  StarMode mode() const { return mode_; }
  bool default_opens() const { return default_opens_; }

  /// ℘ on sites: the ultrafilter extending the site's trace filter.
  std::size_t principal_of_site(int site) const { return principal_[site]; }
  std::size_t principal_of_point(std::uint64_t point) const;
  /// Whether the site's trace filter is itself maximal.
  bool trace_is_maximal(int site) const { return trace_maximal_[site]; }
  IndexSet all_points() const;

 private:
  WallmanSpace(ZeroSetLattice lattice, StarMode mode)
      : lattice_(std::move(lattice)), mode_(mode) {}

  ZeroSetLattice lattice_;
  StarMode mode_;
  bool default_opens_ = true;
  std::vector<Ultrafilter> points_;
  std::vector<LatticeElement> opens_;
  std::vector<IndexSet> base_sets_;
  std::vector<std::size_t> principal_;
  std::vector<bool> trace_maximal_;
};

/// U⋆ = { 𝒰 : T∖U ∉ 𝒰 }.
StarSet star_operator(const WallmanSpace& space, const LatticeElement& open);

struct StarViolation {
  enum class Kind { kMeet, kJoin, kMonotone };
  Kind kind;
  LatticeElement u;
  LatticeElement v;
};

struct StarIdentityReport {
  std::size_t pairs_checked = 0;
  std::vector<StarViolation> violations;
  std::size_t violation_count = 0;

  bool passed() const { return violation_count == 0; }
};

/// Checks (U∩V)⋆ = U⋆∩V⋆, (U∪V)⋆ = U⋆∪V⋆ and U ⊆ V ⇒ U⋆ ⊆ V⋆ over all
/// ordered pairs of `opens` (the space's own opens when empty).
StarIdentityReport verify_star_identities(
    const WallmanSpace& space, std::span<const LatticeElement> opens = {});

struct EmbeddingReport {
  /// t ∈ U ⟺ ℘(t) ∈ U⋆ for every site and open.
  bool eq1_holds = true;
  std::vector<std::pair<int, LatticeElement>> eq1_violations;
  std::size_t pairs_checked = 0;
  /// Every nonempty base set contains some ℘(t).
  bool dense = true;
  std::vector<std::size_t> density_violations;
  /// Every site has a maximal trace filter.
  bool total = true;
  std::vector<int> non_maximal_sites;
  /// ℘ is injective on sites (the lattice separates points).
  bool injective = true;

  bool passed() const { return eq1_holds && dense; }
};

EmbeddingReport verify_principal_embedding(const WallmanSpace& space);

struct CompactnessReport {
  bool covers = false;
  /// Open indices of an irredundant subcover, ascending.
  std::vector<std::size_t> subcover;

  bool passed() const { return covers; }
};

/// Greedy subcover extraction followed by redundancy elimination. `cover`
/// lists open indices; the whole base is used when it is absent.
CompactnessReport check_compactness(
    const WallmanSpace& space,
    std::optional<std::span<const std::size_t>> cover = std::nullopt);

struct HausdorffSeparation {
  std::size_t first;
  std::size_t second;
  std::size_t u_open;
  std::size_t v_open;
};

struct HausdorffReport {
  std::vector<HausdorffSeparation> separations;
  std::vector<std::pair<std::size_t, std::size_t>> failures;
  /// Core pairs for which the ground-level separation check succeeded.
  std::size_t lemma1_separable = 0;
  /// ...and for which the ⋆-images of that separation also separate.
  bool lemma1_consistent = true;

  bool passed() const { return failures.empty() && lemma1_consistent; }
};

HausdorffReport check_hausdorff(const WallmanSpace& space);

/// Every pair of distinct atoms admits disjoint opens from the space's open
/// family.
bool separates_atoms(const WallmanSpace& space);

}  // namespace wallman

#endif  // WALLMAN_WALLMAN_SPACE_HPP_
