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

#include <algorithm>

#include <map>
#include <vector>

#include "fixtures.hpp"
#include "wallman/json_io.hpp"
#include "wallman/random_models.hpp"
#include "wallman/ultralimits.hpp"

namespace wallman {
namespace {

using testing::parity_function;
using testing::parity_space;
using testing::power_set_space;
using testing::q;

BoundedFunction pointwise_product(const BoundedFunction& f, const BoundedFunction& g) {
  std::vector<Rational> values;
  for (int s = 0; s < f.space().site_count(); ++s) values.push_back(f.at_site(s) * g.at_site(s));
  return BoundedFunction(f.space(), std::move(values));
}

TEST(UltrafilterLimit, PrincipalIsPointEvaluation) {
  Rng rng(19, 5);
  for (int n = 1; n <= 6; ++n) {
    const WallmanSpace space = power_set_space(n);
    for (int round = 0; round < 20; ++round) {
      std::vector<Rational> values;
      for (int t = 0; t < n; ++t) values.push_back(rng.dyadic(16));
      const BoundedFunction f = BoundedFunction::finite(space.space(), values);
      for (int t = 0; t < n; ++t) {
        const Ultrafilter& u = space.points()[space.principal_of_point(static_cast<std::uint64_t>(t))];
        EXPECT_EQ(ultrafilter_limit(f, u), values[static_cast<std::size_t>(t)]);
      }
    }
  }
}

TEST(UltrafilterLimit, ConstantsAndParity) {
  const WallmanSpace space = parity_space(2);
  const BoundedFunction c = BoundedFunction::constant(space.space(), q(-3, 7));
  for (const auto& u : space.points()) EXPECT_EQ(ultrafilter_limit(c, u), q(-3, 7));

  // Prefix values are finitely many exceptions along an infinite core.
  const BoundedFunction f = BoundedFunction::natural(
      space.space(), {q(9), q(-9)}, std::map<int, Rational>{{0, q(1)}, {1, q(0)}});
  ASSERT_EQ(space.points()[0].core, testing::evens(space.space()));
  EXPECT_EQ(ultrafilter_limit(f, space.points()[0]), q(1));
  EXPECT_EQ(ultrafilter_limit(f, space.points()[1]), q(0));
}

TEST(UltrafilterLimit, CoarseCoreIsAmbiguous) {
  const GroundSpace g = GroundSpace::finite(2);
  const WallmanSpace space = WallmanSpace::build(generate_lattice(g, {}));
  const BoundedFunction f = BoundedFunction::finite(g, {q(0), q(1)});
  try {
    ultrafilter_limit(f, space.points()[0]);
    FAIL() << "f is not constant on the only atom";
  } catch (const AmbiguousLimitError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAmbiguousLimit);
    EXPECT_EQ(e.candidates(), (std::vector<Rational>{q(0), q(1)}));
  }
}

TEST(NearSetProperty, Examples) {
  const WallmanSpace space = parity_space(3);
  const BoundedFunction c = BoundedFunction::constant(space.space(), q(2));
  const auto grid = default_epsilon_grid(c);
  ASSERT_EQ(grid.size(), 10U);
  EXPECT_EQ(grid.front(), q(1));
  EXPECT_EQ(grid.back(), q(1, 512));
  for (const auto& u : space.points()) {
    const Lemma4Report r = verify_lemma4(c, u, grid);
    EXPECT_TRUE(r.passed());
    for (const auto& check : r.checks) EXPECT_EQ(check.near_set, space.space().full_set());
  }

  const BoundedFunction f = BoundedFunction::natural(
      space.space(), {q(1, 3), q(5), q(0)}, std::map<int, Rational>{{0, q(1)}, {1, q(0)}});
  const std::vector<Rational> half{q(1, 2)};
  const auto evens_point = std::find_if(space.points().begin(), space.points().end(), [&](const Ultrafilter& u) {
    return u.core == testing::evens(space.space());
  });
  ASSERT_NE(evens_point, space.points().end());
  const Lemma4Report r = verify_lemma4(f, *evens_point, half);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.limit, q(1));
  // {t : |f(t) − 1| < 1/2}: eventually the evens; point 0 (value 1/3) is out,
  // point 2 (value 0) is out.
  EXPECT_EQ(r.checks[0].near_set, space.space().parse("000", "10"));

  const WallmanSpace discrete = power_set_space(4);
  const BoundedFunction h = BoundedFunction::finite(discrete.space(), {q(0), q(1), q(2), q(3)});
  for (const auto& u : discrete.points()) EXPECT_TRUE(verify_lemma4(h, u, default_epsilon_grid(h)).passed());
}

TEST(DefaultEpsilonGrid, ScalesWithNorm) {
  const GroundSpace g = GroundSpace::finite(2);
  const auto zero = default_epsilon_grid(BoundedFunction::constant(g, q(0)));
  ASSERT_EQ(zero.size(), 10U);
  EXPECT_EQ(zero[0], q(1, 2));
  const auto three = default_epsilon_grid(BoundedFunction::finite(g, {q(-3), q(1)}));
  EXPECT_EQ(three[0], q(3, 2));
  EXPECT_EQ(three[9], q(3, 1024));
}

TEST(GammaTransform, Examples) {
  const WallmanSpace discrete = power_set_space(3);
  const BoundedFunction f = BoundedFunction::finite(discrete.space(), {q(1, 2), q(-1), q(4)});
  const UltraLimitTable table = extend(f, discrete);
  for (int t = 0; t < 3; ++t) {
    EXPECT_EQ(table.limits[discrete.principal_of_point(static_cast<std::uint64_t>(t))],
              f.at_point(static_cast<std::uint64_t>(t)));
  }
  EXPECT_EQ(gamma_inverse(table, discrete), f);

  const WallmanSpace parity = parity_space();
  const BoundedFunction indicator = parity_function(parity.space(), q(1), q(0));
  const UltraLimitTable two = extend(indicator, parity);
  EXPECT_EQ(two.limits, (std::vector<Rational>{q(1), q(0)}));
  const BoundedFunction back = gamma_inverse(two, parity);
  EXPECT_EQ(back, indicator);
  EXPECT_EQ(back.at_point(0), q(1));
  EXPECT_EQ(back.at_point(7), q(0));
  EXPECT_EQ(back.at_point(1000), q(1));

  const UltraLimitTable constant{{q(5), q(5)}};
  EXPECT_EQ(gamma_inverse(constant, parity), BoundedFunction::constant(parity.space(), q(5)));
}

TEST(GammaTransform, InjectiveOnPointsCollidesOnPrefixExceptions) {
  const WallmanSpace discrete = power_set_space(3);
  const std::vector<BoundedFunction> distinct{
      BoundedFunction::finite(discrete.space(), {q(0), q(0), q(1)}),
      BoundedFunction::finite(discrete.space(), {q(0), q(1), q(0)})};
  EXPECT_TRUE(gamma_transform(distinct, discrete).injective());

  // Point 0 sits in the infinite evens atom, so its value is invisible to limits.
  const WallmanSpace parity = parity_space(1);
  const auto with = [&](const Rational& v0) {
    return BoundedFunction::natural(parity.space(), {v0},
                                    std::map<int, Rational>{{0, q(1)}, {1, q(0)}});
  };
  const std::vector<BoundedFunction> twins{with(q(5)), with(q(1))};
  const GammaTransform gt = gamma_transform(twins, parity);
  ASSERT_EQ(gt.collisions.size(), 1U);
  EXPECT_EQ(gt.collisions[0], (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(GammaContinuity, Examples) {
  const WallmanSpace parity = parity_space();
  const BoundedFunction f = parity_function(parity.space(), q(1), q(0));
  const ContinuityReport same = verify_gamma_continuity(f, f, parity);
  EXPECT_EQ(same.ground_distance, 0);
  EXPECT_EQ(same.extended_distance, 0);
  EXPECT_TRUE(same.passed());
  EXPECT_FALSE(same.ratio.has_value());

  const BoundedFunction g = parity_function(parity.space(), q(13, 10), q(0));
  const ContinuityReport r = verify_gamma_continuity(f, g, parity);
  EXPECT_EQ(r.ground_distance, q(3, 10));
  EXPECT_EQ(r.extended_distance, q(3, 10));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.ratio, q(1));
}

TEST(ComplexFunctions, LimitsAndMetrics) {
  const WallmanSpace parity = parity_space();
  const GroundSpace& g = parity.space();
  const ComplexFunction f{parity_function(g, q(1), q(0)), parity_function(g, q(0), q(2))};
  const ComplexFunction h{BoundedFunction::constant(g, q(0)), BoundedFunction::constant(g, q(0))};
  EXPECT_EQ(ultrafilter_limit(f, parity.points()[0]), (std::pair<Rational, Rational>{q(1), q(0)}));
  EXPECT_EQ(ultrafilter_limit(f, parity.points()[1]), (std::pair<Rational, Rational>{q(0), q(2)}));
  EXPECT_EQ(sup_distance(f, h, ComplexMetric::kMaxComponent), q(2));
  EXPECT_EQ(sup_distance(f, h, ComplexMetric::kEuclidean), q(4));
}

// Randomized: linearity and multiplicativity of limits, the near-set property
// and the distance sandwich.
TEST(LimitProperties, AlgebraAndNearSets) {
  Rng rng(23, 6);
  const ModelSizes sizes;
  for (int round = 0; round < 200; ++round) {
    const WallmanSpace space = build_space(random_lattice_spec(rng, sizes));
    const BoundedFunction f = random_limit_function(rng, space);
    const BoundedFunction g = random_limit_function(rng, space);
    const Rational a = rng.dyadic(4);
    const Rational b = rng.dyadic(4);
    const BoundedFunction combo = a * f + b * g;
    const BoundedFunction product = pointwise_product(f, g);
    for (const auto& u : space.points()) {
      const Rational lf = ultrafilter_limit(f, u);
      const Rational lg = ultrafilter_limit(g, u);
      EXPECT_EQ(ultrafilter_limit(combo, u), a * lf + b * lg);
      EXPECT_EQ(ultrafilter_limit(product, u), lf * lg);
      EXPECT_TRUE(verify_lemma4(f, u, default_epsilon_grid(f)).passed());
    }
  }
}

TEST(LimitProperties, DistanceSandwich) {
  Rng rng(29, 7);
  const ModelSizes sizes;
  for (int round = 0; round < 300; ++round) {
    const WallmanSpace space = build_space(random_lattice_spec(rng, sizes));
    const BoundedFunction f = random_measurable_function(rng, space);
    const BoundedFunction g = random_measurable_function(rng, space);
    const ContinuityReport r = verify_gamma_continuity(f, g, space);
    EXPECT_TRUE(r.passed()) << "round " << round;
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(gamma_inverse(extend(f, space), space), f);

    // Arbitrary limit functions: limits never separate more than points do.
    const BoundedFunction h = random_limit_function(rng, space);
    const BoundedFunction k = random_limit_function(rng, space);
    const ContinuityReport s = verify_gamma_continuity(h, k, space);
    EXPECT_TRUE(s.forward_bound);
    EXPECT_LE(s.extended_distance, s.ground_distance);
  }
}

}  // namespace
}  // namespace wallman
