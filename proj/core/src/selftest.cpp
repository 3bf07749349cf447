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

#include "wallman/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>

#include "wallman/error.hpp"
#include "wallman/filters.hpp"

namespace wallman {
namespace {

// Stream ids keep suites independent of each other's draws.
enum Stream : std::uint64_t {
  kPowerSetStream = 1,
  kLatticeStream,
  kFiltersStream,
  kStarStream,
  kTopologyStream,
  kUltralimitStream,
  kContinuityStream,
  kCrossCheckStream,
  kReductionStream,
  kNumericStream,
};

class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void next_case() { ++result_.cases; }
  void check(bool ok, const std::function<Json()>& describe) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (result_.counterexamples.size() < kMaxCounterexamples) {
      result_.counterexamples.push_back(describe());
    }
  }
  // A thrown error counts as one failed check.
  template <typename Body>
  void guarded(const std::function<Json()>& describe, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] {
        Json j = describe();
        j["error"] = e.what();
        return j;
      });
    }
  }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);
const Rational kEighth(1, 8);

Json case_json(std::size_t index, const LatticeSpec& spec) {
  return {{"case", index}, {"lattice", lattice_spec_json(spec)}};
}

}  // namespace

SuiteResult suite_power_set(const SelftestConfig& config) {
  Tally tally("power_set");
  const int lo = std::max(1, config.sizes.min_sites);
  const int hi = std::min(12, config.sizes.max_sites);
  for (int n = lo; n <= hi; ++n) {
    tally.next_case();
    const auto describe = [n] { return Json{{"size", n}}; };
    tally.guarded(describe, [&] {
      const GroundSpace ground = GroundSpace::finite(n);
      const WallmanSpace space = WallmanSpace::build(power_set_lattice(ground));
      const auto points = space.points();
      tally.check(points.size() == static_cast<std::size_t>(n), describe);
      tally.check(std::all_of(points.begin(), points.end(),
                              [](const Ultrafilter& u) { return u.principal; }),
                  describe);
      tally.check(space.opens().size() == (std::size_t{1} << n), describe);
      IndexSet image;
      for (int t = 0; t < n; ++t) {
        const std::size_t p = space.principal_of_site(t);
        tally.check(points[p].core == ground.site_set(t), describe);
        image.set(p);
      }
      tally.check(image.count() == static_cast<std::size_t>(n), describe);
      // U⋆ = ℘(U) for every U, so ⋆ is the set-algebra isomorphism ℘.
      for (std::size_t k = 0; k < space.opens().size(); ++k) {
        IndexSet expected;
        for (int t = 0; t < n; ++t) {
          if (ground.has_site(space.opens()[k], t)) expected.set(space.principal_of_site(t));
        }
        tally.check(space.base_set(k) == expected, [&] {
          Json j = describe();
          j["open"] = element_json(ground, space.opens()[k]);
          return j;
        });
      }
      tally.check(verify_star_identities(space).passed(), describe);
    });
  }
  return tally.take();
}

SuiteResult suite_lattice(const SelftestConfig& config) {
  Tally tally("lattice");
  Rng rng(config.seed, kLatticeStream);
  for (int c = 0; c < config.lattices; ++c) {
    const LatticeSpec spec = random_lattice_spec(rng, config.sizes);
    const auto describe = [&] { return case_json(static_cast<std::size_t>(c), spec); };
    tally.next_case();
    tally.guarded(describe, [&] {
      const ZeroSetLattice lattice = build_lattice(spec);
      const GroundSpace& ground = lattice.space();
      const auto elements = lattice.elements();
      tally.check(lattice.contains(ground.empty_set()), describe);
      tally.check(lattice.contains(ground.full_set()), describe);
      tally.check(std::adjacent_find(elements.begin(), elements.end(),
                                     [](const auto& a, const auto& b) { return !(a < b); }) ==
                      elements.end(),
                  describe);
      for (const auto& g : spec.generators) tally.check(lattice.contains(g), describe);
      bool closed = true;
      for (const auto& a : elements) {
        for (const auto& b : elements) {
          closed = closed && lattice.contains(a & b) && lattice.contains(a | b);
        }
      }
      tally.check(closed, describe);
      const auto atom_list = atoms(lattice);
      tally.check(!atom_list.empty(), describe);
      for (std::size_t i = 0; i < atom_list.size(); ++i) {
        tally.check(!atom_list[i].empty(), describe);
        for (std::size_t j = i + 1; j < atom_list.size(); ++j) {
          tally.check(!atom_list[i].intersects(atom_list[j]), describe);
        }
        for (const auto& e : elements) {
          const bool strictly_inside = !e.empty() && e.subset_of(atom_list[i]) &&
                                       e != atom_list[i];
          tally.check(!strictly_inside, describe);
        }
      }
      for (const auto& e : elements) {
        const BitPattern p = ground.describe(e);
        tally.check(ground.parse(p.prefix, p.periodic) == e, describe);
      }
    });
  }
  return tally.take();
}

SuiteResult suite_filters(const SelftestConfig& config) {
  Tally tally("filters");
  Rng rng(config.seed, kFiltersStream);
  for (int c = 0; c < config.lattices; ++c) {
    const LatticeSpec spec = random_lattice_spec(rng, config.sizes);
    const auto describe = [&] { return case_json(static_cast<std::size_t>(c), spec); };
    tally.next_case();
    tally.guarded(describe, [&] {
      const WallmanSpace space = build_space(spec);
      const ZeroSetLattice& lattice = space.lattice();
      const GroundSpace& ground = lattice.space();
      const auto points = space.points();
      tally.check(points.size() == atoms(lattice).size(), describe);
      for (const auto& u : points) {
        tally.check(verify_omega_axioms(lattice, u.members).passed(), describe);
        tally.check(u.principal == !u.core.infinite(), describe);
      }
      for (int s = 0; s < ground.site_count(); ++s) {
        const Ultrafilter extended = extend_to_ultrafilter(lattice, site_trace(lattice, s));
        tally.check(extended == points[space.principal_of_site(s)], describe);
        if (ground.is_residue_site(s) || !space.trace_is_maximal(s)) continue;
        const Ultrafilter& p = points[space.principal_of_site(s)];
        if (!p.principal) continue;
        const Ultrafilter direct =
            principal_ultrafilter(lattice, ground.representative_point(s));
        tally.check(direct == p && ground.has_site(direct.core, s), describe);
      }
    });
  }
  return tally.take();
}

SuiteResult suite_star(const SelftestConfig& config) {
  Tally tally("star_identities");
  Rng rng(config.seed, kStarStream);
  for (int c = 0; c < config.lattices; ++c) {
    const LatticeSpec spec = random_lattice_spec(rng, config.sizes);
    const auto describe = [&] { return case_json(static_cast<std::size_t>(c), spec); };
    tally.next_case();
    tally.guarded(describe, [&] {
      const WallmanSpace space = build_space(spec);
      const StarIdentityReport report = verify_star_identities(space);
      tally.check(report.passed(), [&] {
        Json j = describe();
        j["report"] = star_report_json(space.space(), report);
        return j;
      });
    });
  }
  return tally.take();
}

SuiteResult suite_topology(const SelftestConfig& config) {
  Tally tally("topology");
  Rng rng(config.seed, kTopologyStream);
  for (int c = 0; c < config.lattices; ++c) {
    const LatticeSpec spec = random_lattice_spec(rng, config.sizes);
    const auto describe = [&] { return case_json(static_cast<std::size_t>(c), spec); };
    tally.guarded(describe, [&] {
      const WallmanSpace space = build_space(spec);
      if (!separates_atoms(space)) return;
      tally.next_case();
      const GroundSpace& ground = space.space();
      const EmbeddingReport embedding = verify_principal_embedding(space);
      tally.check(embedding.dense, describe);
      for (int s = 0; s < ground.site_count(); ++s) {
        if (!space.trace_is_maximal(s)) continue;
        const std::size_t p = space.principal_of_site(s);
        for (std::size_t k = 0; k < space.opens().size(); ++k) {
          tally.check(ground.has_site(space.opens()[k], s) == space.base_set(k).test(p),
                      describe);
        }
      }
      tally.check(check_compactness(space).passed(), describe);
      const HausdorffReport hausdorff = check_hausdorff(space);
      tally.check(hausdorff.passed(), [&] {
        Json j = describe();
        j["report"] = hausdorff_report_json(hausdorff);
        return j;
      });
    });
  }
  return tally.take();
}

SuiteResult suite_ultralimits(const SelftestConfig& config) {
  Tally tally("ultralimits");
  Rng rng(config.seed, kUltralimitStream);
  for (int c = 0; c < config.lattices; ++c) {
    const LatticeSpec spec = random_lattice_spec(rng, config.sizes);
    const auto describe = [&] { return case_json(static_cast<std::size_t>(c), spec); };
    tally.next_case();
    tally.guarded(describe, [&] {
      const WallmanSpace space = build_space(spec);
      const GroundSpace& ground = space.space();
      const auto points = space.points();
      const BoundedFunction f = random_limit_function(rng, space);
      const BoundedFunction g = random_limit_function(rng, space);
      const Rational a = rng.dyadic(4);
      const Rational b = rng.dyadic(4);
      const BoundedFunction h = a * f + b * g;
      for (int s = 0; s < ground.site_count(); ++s) {
        const Ultrafilter& p = points[space.principal_of_site(s)];
        if (!space.trace_is_maximal(s) || !p.principal) continue;
        tally.check(ultrafilter_limit(f, p) == f.at_site(s), describe);
      }
      for (const auto& u : points) {
        tally.check(verify_lemma4(f, u, default_epsilon_grid(f)).passed(), describe);
        tally.check(ultrafilter_limit(h, u) ==
                        a * ultrafilter_limit(f, u) + b * ultrafilter_limit(g, u),
                    describe);
      }
    });
  }
  return tally.take();
}

SuiteResult suite_continuity(const SelftestConfig& config) {
  Tally tally("continuity");
  Rng rng(config.seed, kContinuityStream);
  constexpr int kPairsPerSpace = 10;
  for (int done = 0, c = 0; done < config.function_pairs; ++c) {
    const LatticeSpec spec = random_lattice_spec(rng, config.sizes);
    const auto describe = [&] { return case_json(static_cast<std::size_t>(c), spec); };
    const int pairs = std::min(kPairsPerSpace, config.function_pairs - done);
    done += pairs;
    tally.guarded(describe, [&] {
      const WallmanSpace space = build_space(spec);
      for (int i = 0; i < pairs; ++i) {
        tally.next_case();
        const BoundedFunction f = random_measurable_function(rng, space);
        const BoundedFunction g = random_measurable_function(rng, space);
        const ContinuityReport r = verify_gamma_continuity(f, g, space);
        tally.check(r.passed(), [&] {
          Json j = describe();
          j["f"] = function_json(f);
          j["g"] = function_json(g);
          return j;
        });
        tally.check(gamma_inverse(extend(f, space), space) == f, describe);
        // Limits alone never increase the sup distance.
        const BoundedFunction p = random_limit_function(rng, space);
        const BoundedFunction q = random_limit_function(rng, space);
        tally.check(verify_gamma_continuity(p, q, space).forward_bound, describe);
      }
    });
  }
  return tally.take();
}

SuiteResult suite_aa_cross_check(const SelftestConfig& config) {
  Tally tally("aa_cross_check");
  Rng rng(config.seed, kCrossCheckStream);
  const std::vector<Rational> grid = {kHalf, kQuarter, kEighth};
  for (int c = 0; c < config.families; ++c) {
    const LatticeSpec spec = random_lattice_spec(rng, config.sizes);
    tally.next_case();
    std::optional<WallmanSpace> space;
    ExactFamily family;
    const auto describe = [&] {
      Json j = case_json(static_cast<std::size_t>(c), spec);
      if (!family.functions.empty()) j["family"] = exact_family_json(spec, family);
      return j;
    };
    tally.guarded(describe, [&] {
      space.emplace(build_space(spec));
      family = random_family(rng, *space, config.sizes);
      const ExactCertificate cert = certify_exact(family, *space, grid);
      for (const auto& s : cert.scales) {
        tally.check(s.net.exact, describe);
        tally.check(s.forward.holds, [&] {
          Json j = describe();
          j["eps"] = to_string(s.eps);
          j["direction"] = "forward";
          return j;
        });
        tally.check(s.backward.holds, [&] {
          Json j = describe();
          j["eps"] = to_string(s.eps);
          j["direction"] = "backward";
          return j;
        });
      }
      for (std::size_t i = 1; i < cert.scales.size(); ++i) {
        const auto& coarse = cert.scales[i - 1];
        const auto& fine = cert.scales[i];
        tally.check(coarse.net.size() <= fine.net.size(), describe);
        tally.check(!fine.aa2.passed || coarse.aa2.passed, describe);
      }
    });
  }
  return tally.take();
}

SuiteResult suite_principal_reduction(const SelftestConfig& config) {
  Tally tally("principal_reduction");
  Rng rng(config.seed, kReductionStream);
  const std::vector<Rational> grid = {kHalf, kQuarter, kEighth};
  for (int c = 0; c < config.families; ++c) {
    const LatticeSpec spec = random_lattice_spec(rng, config.sizes);
    tally.next_case();
    const auto describe = [&] { return case_json(static_cast<std::size_t>(c), spec); };
    tally.guarded(describe, [&] {
      const WallmanSpace space = build_space(spec);
      const ExactFamily family = random_family(rng, space, config.sizes);
      const ExactAnalysis analysis(family, space);
      for (const auto& eps : grid) {
        const bool aa2 = analysis.aa2(eps, {}, true).passed;
        const bool kp2 = check_discrete_KP2(family, space, eps).passed;
        tally.check(aa2 == kp2, [&] {
          Json j = describe();
          j["family"] = exact_family_json(spec, family);
          j["eps"] = to_string(eps);
          return j;
        });
      }
    });
  }
  return tally.take();
}

SuiteResult suite_numeric(const SelftestConfig& config) {
  Tally tally("numeric");
  Rng rng(config.seed, kNumericStream);
  const double eps_choices[] = {0.05, 0.1, 0.2, 0.25, 0.5};
  for (int c = 0; c < config.numeric_cases; ++c) {
    const int m = rng.range(2, 41);
    const double eps = eps_choices[rng.below(std::size(eps_choices))];
    const auto describe = [&] {
      return Json{{"case", c}, {"members", m}, {"eps", format_double(eps)}};
    };
    tally.next_case();
    tally.guarded(describe, [&] {
      SampledFamily family;
      // Step 0.025 keeps adjacent-sample jumps (at most 0.025 * 0.86) below
      // the smallest ε, so a modulus exists at grid resolution.
      for (int i = -160; i <= 160; ++i) family.grid.push_back(i / 40.0);
      for (int k = 0; k < m; ++k) {
        const double scale = static_cast<double>(k) / (m - 1);
        SampledFunction f;
        for (double t : family.grid) f.samples.push_back(scale * std::exp(-t * t));
        f.tail_pos = 0.0;
        f.tail_neg = 0.0;
        family.functions.push_back(std::move(f));
      }
      const NumericAnalysis analysis(family, NumericConfig{});
      // Evenly spaced parameters: each closed ball holds 2r + 1 of them.
      const auto r = static_cast<std::size_t>(std::floor(eps * (m - 1) + 1e-9));
      const std::size_t block = 2 * r + 1;
      const std::size_t expected = (static_cast<std::size_t>(m) + block - 1) / block;
      const NetResult net = minimum_net(analysis.closeness(eps));
      tally.check(net.exact && net.size() == expected, [&] {
        Json j = describe();
        j["net_size"] = net.size();
        j["expected"] = expected;
        return j;
      });
      const auto tagged = [&](const char* check) {
        return [&describe, check] {
          Json j = describe();
          j["check"] = check;
          return j;
        };
      };
      tally.check(analysis.kp3(eps).passed, tagged("KP3"));
      tally.check(analysis.condition_p(eps).propagation_holds, tagged("P"));
      tally.check(analysis.kp2(eps).passed, tagged("KP2"));
    });
  }
  return tally.take();
}

bool SelftestReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed(); });
}

SelftestReport run_selftest(const SelftestConfig& config) {
  const ModelSizes& s = config.sizes;
  if (s.min_sites < 1 || s.max_sites < s.min_sites || s.max_sites > 64 ||
      s.min_generators < 0 || s.max_generators < s.min_generators ||
      s.max_generators > 16 || s.max_functions < 1 || config.lattices < 0 ||
      config.families < 0 || config.function_pairs < 0 || config.numeric_cases < 0) {
    throw Error(ErrorCode::kInvalidConfig, "selftest sizes out of range");
  }
  SelftestReport report;
  report.config = config;
  report.suites.push_back(suite_power_set(config));
  report.suites.push_back(suite_lattice(config));
  report.suites.push_back(suite_filters(config));
  report.suites.push_back(suite_star(config));
  report.suites.push_back(suite_topology(config));
  report.suites.push_back(suite_ultralimits(config));
  report.suites.push_back(suite_continuity(config));
  report.suites.push_back(suite_aa_cross_check(config));
  report.suites.push_back(suite_principal_reduction(config));
  report.suites.push_back(suite_numeric(config));
  return report;
}

Json selftest_json(const SelftestReport& report) {
  const SelftestConfig& c = report.config;
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    suites.push_back({{"name", s.name},
                      {"passed", s.passed()},
                      {"cases", s.cases},
                      {"checks", s.checks},
                      {"failures", s.failures},
                      {"counterexamples", s.counterexamples}});
  }
  return {{"seed", std::to_string(c.seed)},
          {"config",
           {{"min_sites", c.sizes.min_sites},
            {"max_sites", c.sizes.max_sites},
            {"min_generators", c.sizes.min_generators},
            {"max_generators", c.sizes.max_generators},
            {"max_functions", c.sizes.max_functions},
            {"lattices", c.lattices},
            {"families", c.families},
            {"function_pairs", c.function_pairs},
            {"numeric_cases", c.numeric_cases}}},
          {"suites", std::move(suites)},
          {"passed", report.passed()}};
}

}  // namespace wallman
