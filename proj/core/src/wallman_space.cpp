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

#include "wallman/wallman_space.hpp"

#include <algorithm>
#include <string>

#include "wallman/error.hpp"

namespace wallman {
namespace {

constexpr std::size_t kMaxReportedViolations = 32;

IndexSet star_members(const WallmanSpace& space, const LatticeElement& open) {
  const GroundSpace& ground = space.space();
  if (!ground.in_space(open)) {
    throw Error(ErrorCode::kInvalidInput, "open set outside the ground space");
  }
  const LatticeElement closed = ground.complement(open);
  if (space.mode() == StarMode::kStrict && !space.lattice().contains(closed)) {
    throw Error(ErrorCode::kComplementNotInLattice,
                "complement of the open set is not a lattice element");
  }
  IndexSet members;
  const auto points = space.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!ultrafilter_contains(points[i], closed)) members.set(i);
  }
  return members;
}

}  // namespace

WallmanSpace WallmanSpace::build(
    ZeroSetLattice lattice, std::optional<std::vector<LatticeElement>> opens,
    StarMode mode) {
  WallmanSpace space(std::move(lattice), mode);
  const ZeroSetLattice& lat = space.lattice_;
  const GroundSpace& ground = lat.space();

  space.points_ = enumerate_ultrafilters(lat);

  if (opens) {
    space.default_opens_ = false;
    space.opens_ = std::move(*opens);
  } else {
    for (const auto& c : lat.elements()) {
      space.opens_.push_back(ground.complement(c));
    }
  }
  std::sort(space.opens_.begin(), space.opens_.end());
  space.opens_.erase(std::unique(space.opens_.begin(), space.opens_.end()),
                     space.opens_.end());
  for (const auto& u : space.opens_) {
    space.base_sets_.push_back(star_members(space, u));
  }

  const int sites = ground.site_count();
  space.principal_.resize(static_cast<std::size_t>(sites));
  space.trace_maximal_.resize(static_cast<std::size_t>(sites));
  for (int s = 0; s < sites; ++s) {
    const Ultrafilter u = extend_to_ultrafilter(lat, site_trace(lat, s));
    auto it = std::find_if(
        space.points_.begin(), space.points_.end(),
        [&](const Ultrafilter& p) { return p.core == u.core; });
    space.principal_[static_cast<std::size_t>(s)] =
        static_cast<std::size_t>(it - space.points_.begin());
    space.trace_maximal_[static_cast<std::size_t>(s)] =
        ground.has_site(u.core, s);
  }
  return space;
}

std::size_t WallmanSpace::principal_of_point(std::uint64_t point) const {
  return principal_of_site(space().site_of_point(point));
}

IndexSet WallmanSpace::all_points() const {
  IndexSet all;
  for (std::size_t i = 0; i < points_.size(); ++i) all.set(i);
  return all;
}

StarSet star_operator(const WallmanSpace& space, const LatticeElement& open) {
  return StarSet{open, star_members(space, open)};
}

StarIdentityReport verify_star_identities(
    const WallmanSpace& space, std::span<const LatticeElement> opens) {
  if (opens.empty()) opens = space.opens();
  StarIdentityReport report;
  std::vector<IndexSet> stars;
  stars.reserve(opens.size());
  for (const auto& u : opens) stars.push_back(star_members(space, u));

  auto record = [&](StarViolation::Kind kind, const LatticeElement& u,
                    const LatticeElement& v) {
    ++report.violation_count;
    if (report.violations.size() < kMaxReportedViolations) {
      report.violations.push_back({kind, u, v});
    }
  };
  for (std::size_t i = 0; i < opens.size(); ++i) {
    for (std::size_t j = 0; j < opens.size(); ++j) {
      ++report.pairs_checked;
      const LatticeElement& u = opens[i];
      const LatticeElement& v = opens[j];
      if (star_members(space, u & v) != (stars[i] & stars[j])) {
        record(StarViolation::Kind::kMeet, u, v);
      }
      if (star_members(space, u | v) != (stars[i] | stars[j])) {
        record(StarViolation::Kind::kJoin, u, v);
      }
      if (u.subset_of(v) && (stars[i] & ~stars[j]).any()) {
        record(StarViolation::Kind::kMonotone, u, v);
      }
    }
  }
  return report;
}

EmbeddingReport verify_principal_embedding(const WallmanSpace& space) {
  EmbeddingReport report;
  const GroundSpace& ground = space.space();
  const auto opens = space.opens();
  const int sites = ground.site_count();

  IndexSet image;
  for (int s = 0; s < sites; ++s) {
    const std::size_t p = space.principal_of_site(s);
    if (image.test(p)) report.injective = false;
    image.set(p);
    if (!space.trace_is_maximal(s)) {
      report.total = false;
      report.non_maximal_sites.push_back(s);
    }
    for (std::size_t k = 0; k < opens.size(); ++k) {
      ++report.pairs_checked;
      const bool in_open = ground.has_site(opens[k], s);
      const bool in_star = space.base_set(k).test(p);
      if (in_open != in_star) {
        report.eq1_holds = false;
        if (report.eq1_violations.size() < kMaxReportedViolations) {
          report.eq1_violations.emplace_back(s, opens[k]);
        }
      }
    }
  }
  for (std::size_t k = 0; k < opens.size(); ++k) {
    const IndexSet& base = space.base_set(k);
    if (base.any() && (base & image).none()) {
      report.dense = false;
      report.density_violations.push_back(k);
    }
  }
  return report;
}

CompactnessReport check_compactness(
    const WallmanSpace& space,
    std::optional<std::span<const std::size_t>> cover) {
  std::vector<std::size_t> family;
  if (cover) {
    for (std::size_t k : *cover) {
      if (k >= space.opens().size()) {
        throw Error(ErrorCode::kInvalidInput,
                    "cover index " + std::to_string(k) + " out of range");
      }
      family.push_back(k);
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
  } else {
    for (std::size_t k = 0; k < space.opens().size(); ++k) family.push_back(k);
  }

  CompactnessReport report;
  const IndexSet all = space.all_points();
  IndexSet uncovered = all;
  std::vector<std::size_t> chosen;
  while (uncovered.any()) {
    std::size_t best = family.size();
    std::size_t best_gain = 0;
    for (std::size_t f = 0; f < family.size(); ++f) {
      const std::size_t gain = (space.base_set(family[f]) & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = f;
      }
    }
    if (best == family.size()) return report;
    chosen.push_back(family[best]);
    uncovered &= ~space.base_set(family[best]);
  }
  report.covers = true;

  // Reverse delete: drop any chosen set the others already cover.
  for (std::size_t i = chosen.size(); i-- > 0;) {
    IndexSet rest;
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      if (j != i) rest |= space.base_set(chosen[j]);
    }
    if ((all & ~rest).none()) chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
  }
  std::sort(chosen.begin(), chosen.end());
  report.subcover = std::move(chosen);
  return report;
}

HausdorffReport check_hausdorff(const WallmanSpace& space) {
  HausdorffReport report;
  const auto points = space.points();
  const auto opens = space.opens();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      bool found = false;
      for (std::size_t a = 0; a < opens.size() && !found; ++a) {
        if (!space.base_set(a).test(i)) continue;
        for (std::size_t b = 0; b < opens.size() && !found; ++b) {
          if (!space.base_set(b).test(j)) continue;
          if ((space.base_set(a) & space.base_set(b)).none()) {
            report.separations.push_back({i, j, a, b});
            found = true;
          }
        }
      }
      if (!found) report.failures.emplace_back(i, j);

      const SeparationResult ground = separation_check(
          space.lattice(), points[i].core, points[j].core, opens);
      if (ground.separated()) {
        ++report.lemma1_separable;
        const IndexSet su = star_members(space, ground.witness->u);
        const IndexSet sv = star_members(space, ground.witness->v);
        if (!su.test(i) || !sv.test(j) || (su & sv).any()) {
          report.lemma1_consistent = false;
        }
      }
    }
  }
  return report;
}

bool separates_atoms(const WallmanSpace& space) {
  const auto points = space.points();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (!separation_check(space.lattice(), points[i].core, points[j].core,
                            space.opens())
               .separated()) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace wallman
