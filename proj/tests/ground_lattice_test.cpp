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

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "wallman/error.hpp"
#include "wallman/ground_lattice.hpp"
#include "wallman/json_io.hpp"
#include "wallman/random_models.hpp"

namespace wallman {
namespace {

using testing::evens;
using testing::odds;
using testing::parity_ground;
using testing::parity_lattice;

std::set<oracle::SiteSet> as_sites(const ZeroSetLattice& lattice) {
  std::set<oracle::SiteSet> out;
  for (const auto& e : lattice.elements()) out.insert(oracle::to_sites(lattice.space(), e));
  return out;
}

TEST(GenerateLattice, EmptyGenerationIsTrivial) {
  const GroundSpace g = GroundSpace::finite(4);
  const ZeroSetLattice lattice = generate_lattice(g, {});
  ASSERT_EQ(lattice.size(), 2U);
  EXPECT_TRUE(lattice.contains(g.empty_set()));
  EXPECT_TRUE(lattice.contains(g.full_set()));
}

TEST(GenerateLattice, ComplementaryPairGivesFourElements) {
  const GroundSpace g = GroundSpace::finite(4);
  const std::vector<LatticeElement> gens{g.parse("1100"), g.parse("0011")};
  const ZeroSetLattice lattice = generate_lattice(g, gens);
  EXPECT_EQ(lattice.size(), 4U);
  for (const auto& e : gens) EXPECT_TRUE(lattice.contains(e));
}

TEST(GenerateLattice, ParityLatticeHasFourElements) {
  const ZeroSetLattice lattice = parity_lattice();
  const GroundSpace& g = lattice.space();
  ASSERT_EQ(lattice.size(), 4U);
  EXPECT_TRUE(lattice.contains(evens(g)));
  EXPECT_TRUE(lattice.contains(odds(g)));
  EXPECT_EQ(evens(g) | odds(g), g.full_set());
}

TEST(GenerateLattice, EnforcesLimits) {
  const GroundSpace g = GroundSpace::finite(8);
  std::vector<LatticeElement> gens;
  for (int i = 0; i < 8; ++i) gens.push_back(g.site_set(i));
  EXPECT_THROW(
      {
        try {
          generate_lattice(g, gens, GenerationLimits{4, 4096});
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kTooManyGenerators);
          throw;
        }
      },
      Error);
  EXPECT_THROW(
      {
        try {
          generate_lattice(g, gens, GenerationLimits{16, 100});
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kLatticeTooLarge);
          throw;
        }
      },
      Error);
}

TEST(Atoms, Examples) {
  const GroundSpace g3 = GroundSpace::finite(3);
  const auto trivial = atoms(generate_lattice(g3, {}));
  ASSERT_EQ(trivial.size(), 1U);
  EXPECT_EQ(trivial[0], g3.full_set());

  const auto singletons = atoms(power_set_lattice(g3));
  ASSERT_EQ(singletons.size(), 3U);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(singletons[static_cast<std::size_t>(i)], g3.site_set(i));

  const ZeroSetLattice parity = parity_lattice();
  const auto two = atoms(parity);
  ASSERT_EQ(two.size(), 2U);
  EXPECT_EQ(two[0], evens(parity.space()));
  EXPECT_EQ(two[1], odds(parity.space()));
}

TEST(Atoms, PowerSetGivesSingletons) {
  for (int n = 1; n <= 8; ++n) {
    const GroundSpace g = GroundSpace::finite(n);
    const ZeroSetLattice lattice = power_set_lattice(g);
    EXPECT_EQ(lattice.size(), std::size_t{1} << n);
    const auto a = atoms(lattice);
    ASSERT_EQ(a.size(), static_cast<std::size_t>(n));
    for (const auto& atom : a) EXPECT_EQ(g.sites_of(atom).size(), 1U);
  }
}

TEST(SeparationCheck, Examples) {
  const ZeroSetLattice discrete = power_set_lattice(GroundSpace::finite(2));
  const GroundSpace& g2 = discrete.space();
  const auto r1 = separation_check(discrete, g2.site_set(0), g2.site_set(1), discrete.elements());
  ASSERT_TRUE(r1.separated());
  EXPECT_EQ(r1.witness->u, g2.site_set(0));
  EXPECT_EQ(r1.witness->v, g2.site_set(1));

  const ZeroSetLattice parity = parity_lattice();
  const GroundSpace& g = parity.space();
  const auto r2 = separation_check(parity, evens(g), odds(g), parity.elements());
  ASSERT_TRUE(r2.separated());
  EXPECT_EQ(r2.witness->u, evens(g));
  EXPECT_EQ(r2.witness->v, odds(g));

  const auto r3 = separation_check(parity, g.empty_set(), g.full_set(), parity.elements());
  ASSERT_TRUE(r3.separated());
  EXPECT_EQ(r3.witness->u, g.empty_set());
  EXPECT_EQ(r3.witness->v, g.full_set());
}

TEST(SeparationCheck, ReportsBlockingPairsAndRejectsOverlap) {
  const GroundSpace g = GroundSpace::finite(3);
  const std::vector<LatticeElement> opens{g.parse("110"), g.parse("011"), g.full_set()};
  const ZeroSetLattice lattice = generate_lattice(g, opens);
  const auto r = separation_check(lattice, g.site_set(0), g.site_set(2), opens);
  EXPECT_FALSE(r.separated());
  EXPECT_FALSE(r.blocking.empty());
  EXPECT_EQ(r.candidate_pairs, 4U);
  EXPECT_THROW(separation_check(lattice, g.parse("110"), g.parse("011"), opens), Error);
}

TEST(GroundSpace, ParseValidation) {
  const GroundSpace g = GroundSpace::natural(2, 1);
  EXPECT_THROW(g.parse("", "100"), Error);          // minimal period 3
  EXPECT_THROW(g.parse("100", "10"), Error);   // bit 2 disagrees with the pattern
  EXPECT_NO_THROW(g.parse("1010", "10"));      // bits past the prefix agree
  EXPECT_EQ(g.parse("1010", "10"), g.parse("1", "10"));
  EXPECT_THROW(GroundSpace::finite(3).parse("0001"), Error);
  EXPECT_THROW(GroundSpace::finite(3).parse("", "1"), Error);
  EXPECT_THROW(GroundSpace::finite(3).parse("1x"), Error);
}

TEST(GroundSpace, PointsMapToSites) {
  const GroundSpace g = GroundSpace::natural(3, 2);
  EXPECT_EQ(g.site_count(), 5);
  EXPECT_EQ(g.site_of_point(0), 0);
  EXPECT_EQ(g.site_of_point(1), 1);
  // Points past the prefix fall into residue classes mod 3.
  EXPECT_EQ(g.site_of_point(2), 2 + 2);
  EXPECT_EQ(g.site_of_point(3), 2 + 0);
  EXPECT_EQ(g.site_of_point(301), 2 + 1);
  const LatticeElement e = g.parse("1", "001");
  EXPECT_TRUE(g.contains_point(e, 0));
  EXPECT_FALSE(g.contains_point(e, 1));
  EXPECT_TRUE(g.contains_point(e, 2));
  EXPECT_TRUE(g.contains_point(e, 1001));
  EXPECT_FALSE(g.contains_point(e, 1000));
}

// Randomized: closure, atoms and canonical forms against the brute-force oracle.
TEST(LatticeProperties, MatchesNaiveClosure) {
  Rng rng(7, 1);
  const ModelSizes sizes;
  for (int round = 0; round < 300; ++round) {
    const LatticeSpec spec = random_lattice_spec(rng, sizes);
    const ZeroSetLattice lattice = build_lattice(spec);
    const GroundSpace& g = lattice.space();
    std::vector<oracle::SiteSet> gens;
    for (const auto& e : spec.generators) gens.push_back(oracle::to_sites(g, e));
    const auto expected = oracle::closure(static_cast<std::size_t>(g.site_count()), gens);
    ASSERT_EQ(as_sites(lattice), expected) << "round " << round;
    EXPECT_LE(lattice.size(), oracle::kDedekind[spec.generators.size()]);

    for (const auto& a : lattice.elements()) {
      for (const auto& b : lattice.elements()) {
        ASSERT_TRUE(lattice.contains(a & b));
        ASSERT_TRUE(lattice.contains(a | b));
      }
      const BitPattern p = g.describe(a);
      EXPECT_EQ(g.parse(p.prefix, p.periodic), a);
      EXPECT_EQ(g.describe(g.parse(p.prefix, p.periodic)), p);
    }

    const auto got = atoms(lattice);
    std::set<oracle::SiteSet> got_sites;
    for (const auto& a : got) got_sites.insert(oracle::to_sites(g, a));
    EXPECT_EQ(got_sites, oracle::atoms(expected));
    for (std::size_t i = 0; i < got.size(); ++i) {
      for (std::size_t j = i + 1; j < got.size(); ++j) {
        EXPECT_FALSE(got[i].intersects(got[j]));
        EXPECT_FALSE(got[i].subset_of(got[j]) || got[j].subset_of(got[i]));
      }
    }
  }
}

TEST(LatticeProperties, DedekindBoundIsTightForIndependentSets) {
  // Generators in general position over enough points realise the free
  // distributive lattice.
  for (std::size_t n = 0; n <= 3; ++n) {
    const int sites = 1 << n;
    const GroundSpace g = GroundSpace::finite(sites);
    std::vector<LatticeElement> gens;
    for (std::size_t k = 0; k < n; ++k) {
      LatticeElement e;
      for (int t = 0; t < sites; ++t) {
        if ((t >> k) & 1) e = e | g.site_set(t);
      }
      gens.push_back(e);
    }
    EXPECT_EQ(generate_lattice(g, gens).size(), oracle::kDedekind[n]);
  }
}

}  // namespace
}  // namespace wallman
