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

#include "wallman/filters.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "wallman/error.hpp"

namespace wallman {
namespace {

LatticeElement intersection_of(const ZeroSetLattice& lattice,
                               std::span<const std::size_t> members) {
  LatticeElement acc = lattice.space().full_set();
  for (std::size_t i : members) acc = acc & lattice[i];
  return acc;
}

bool is_atom(const ZeroSetLattice& lattice, const LatticeElement& e) {
  if (e.empty() || !lattice.contains(e)) return false;
  for (const auto& other : lattice.elements()) {
    if (!other.empty() && other != e && other.subset_of(e)) return false;
  }
  return true;
}

void check_indices(const ZeroSetLattice& lattice,
                   std::span<const std::size_t> members) {
  for (std::size_t i : members) {
    if (i >= lattice.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  "lattice index " + std::to_string(i) + " out of range");
    }
  }
}

}  // namespace

Ultrafilter ultrafilter_from_atom(const ZeroSetLattice& lattice,
                                  const LatticeElement& atom) {
  Ultrafilter u;
  u.core = atom;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (atom.subset_of(lattice[i])) u.members.push_back(i);
  }
  u.principal = !atom.infinite();
  if (u.principal) {
    u.witness = static_cast<std::uint64_t>(std::countr_zero(atom.head));
    u.separating = std::popcount(atom.head) == 1;
  }
  return u;
}

FilterBase site_trace(const ZeroSetLattice& lattice, int site) {
  FilterBase trace;
  const GroundSpace& space = lattice.space();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (space.has_site(lattice[i], site)) trace.members.push_back(i);
  }
  return trace;
}

Ultrafilter principal_ultrafilter(const ZeroSetLattice& lattice,
                                  std::uint64_t point) {
  const int site = lattice.space().site_of_point(point);
  const FilterBase trace = site_trace(lattice, site);
  const LatticeElement core = intersection_of(lattice, trace.members);
  if (!is_atom(lattice, core)) {
    throw Error(ErrorCode::kNotMaximal,
                "the lattice trace of point " + std::to_string(point) +
                    " is not maximal: its intersection is not an atom");
  }
  return ultrafilter_from_atom(lattice, core);
}

std::vector<Ultrafilter> enumerate_ultrafilters(const ZeroSetLattice& lattice) {
  std::vector<Ultrafilter> result;
  for (const auto& a : atoms(lattice)) {
    result.push_back(ultrafilter_from_atom(lattice, a));
  }
  return result;
}

Ultrafilter extend_to_ultrafilter(const ZeroSetLattice& lattice,
                                  const FilterBase& base) {
  check_indices(lattice, base.members);
  const LatticeElement meet = intersection_of(lattice, base.members);
  if (meet.empty()) {
    throw Error(ErrorCode::kEmptyIntersection,
                "filter base has empty intersection");
  }
  // Atoms come out in canonical order, so the first one below the meet is
  // the tie-break winner. The meet is a nonempty lattice element, hence
  // contains at least one atom.
  for (const auto& a : atoms(lattice)) {
    if (a.subset_of(meet)) return ultrafilter_from_atom(lattice, a);
  }
  throw Error(ErrorCode::kEmptyIntersection, "no atom below the filter base");
}

OmegaReport verify_omega_axioms(const ZeroSetLattice& lattice,
                                std::span<const std::size_t> candidate) {
  check_indices(lattice, candidate);
  OmegaReport report;
  std::vector<std::size_t> members(candidate.begin(), candidate.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  const LatticeElement meet = intersection_of(lattice, members);
  report.finite_intersection = !meet.empty();
  if (!report.finite_intersection) {
    // Drop members while the rest still has empty intersection.
    std::vector<std::size_t> witness = members;
    for (std::size_t k = 0; k < witness.size();) {
      std::vector<std::size_t> without = witness;
      without.erase(without.begin() + static_cast<std::ptrdiff_t>(k));
      if (intersection_of(lattice, without).empty()) {
        witness = std::move(without);
      } else {
        ++k;
      }
    }
    report.violating_subfamily = std::move(witness);
    return report;
  }

  report.maximal = true;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (std::binary_search(members.begin(), members.end(), i)) continue;
    if (lattice[i].intersects(meet)) {
      report.maximal = false;
      report.addable = i;
      break;
    }
  }
  return report;
}

bool ultrafilter_contains(const Ultrafilter& u, const LatticeElement& set) {
  if (u.core.infinite()) return (u.core.tail & ~set.tail) == 0;
  return u.core.subset_of(set);
}

}  // namespace wallman
