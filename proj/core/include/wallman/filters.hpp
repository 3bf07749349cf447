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

// Filters and ω-ultrafilters on a finite zero-set lattice.
//
// In a finite ∩-closed lattice a family with the finite intersection
// property is maximal exactly when it is the upward closure of an atom, so
// every ultrafilter is identified by its core atom.
//
// Principality is relative to the lattice. An ultrafilter whose core is a
// finite set behaves like a point: limits along it are point evaluations and
// every point of the core has the ultrafilter as its trace. An ultrafilter
// with an infinite core (only possible on ℕ models) is the lattice-level
// shadow of the free ultrafilters refining that core; limits along it are
// eventual values, and membership of non-lattice sets ignores finitely many
// points.

#ifndef WALLMAN_FILTERS_HPP_
#define WALLMAN_FILTERS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wallman/ground_lattice.hpp"

namespace wallman {

/// Members are lattice indices, ascending.
struct FilterBase {
  std::vector<std::size_t> members;
};

struct Ultrafilter {
  LatticeElement core;
  std::vector<std::size_t> members;
  /// The core is finite, so the ultrafilter is the trace of a genuine point.
  bool principal = false;
  /// Smallest point of the core when principal.
  std::optional<std::uint64_t> witness;
  /// The core is a single point: the lattice resolves this ultrafilter to
  /// exactly one point of the ground space.
  bool separating = false;

  friend bool operator==(const Ultrafilter&, const Ultrafilter&) = default;
};

Ultrafilter ultrafilter_from_atom(const ZeroSetLattice& lattice,
                                  const LatticeElement& atom);

/// All lattice elements containing `point`. Throws kNotMaximal when that
/// trace is not an ultrafilter of the lattice (its intersection is not an
/// atom), i.e. the point lies outside every atom.
Ultrafilter principal_ultrafilter(const ZeroSetLattice& lattice,
                                  std::uint64_t point);

/// Trace filter of a site; never throws.
FilterBase site_trace(const ZeroSetLattice& lattice, int site);

/// One ultrafilter per atom, ordered by core.
std::vector<Ultrafilter> enumerate_ultrafilters(const ZeroSetLattice& lattice);

/// Upward closure of the canonically smallest atom below ⋂ base. Throws
/// kEmptyIntersection when the base lacks the finite intersection property.
Ultrafilter extend_to_ultrafilter(const ZeroSetLattice& lattice,
                                  const FilterBase& base);

struct OmegaReport {
  bool finite_intersection = false;
  /// Minimal subfamily with empty intersection, when (ω1) fails.
  std::vector<std::size_t> violating_subfamily;
  bool maximal = false;
  /// First lattice element that could be added keeping (ω1), when (ω2) fails.
  std::optional<std::size_t> addable;

  bool passed() const { return finite_intersection && maximal; }
};

OmegaReport verify_omega_axioms(const ZeroSetLattice& lattice,
                                std::span<const std::size_t> candidate);

/// Membership of an arbitrary representable set. Exact for lattice elements;
/// for other sets a finite core must lie inside the set, an infinite core
/// must lie inside it up to finitely many points.
bool ultrafilter_contains(const Ultrafilter& u, const LatticeElement& set);

}  // namespace wallman

#endif  // WALLMAN_FILTERS_HPP_
