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

#include "wallman/aa_certifier.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "wallman/error.hpp"

namespace wallman {
namespace {

void require_nonempty(const ExactFamily& family) {
  if (family.functions.empty()) {
    throw Error(ErrorCode::kInvalidInput, "function family is empty");
  }
}

void require_positive(const Rational& eps) {
  if (eps <= 0) throw Error(ErrorCode::kInvalidConfig, "epsilon must be positive");
}

// Greedy 1-D clustering: each cluster spans at most `width`.
std::vector<int> cluster_ids(const std::vector<Rational>& values,
                             const Rational& width, int* clusters) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] < values[b];
  });
  std::vector<int> ids(values.size(), 0);
  int id = -1;
  Rational start;
  for (std::size_t idx : order) {
    if (id < 0 || values[idx] > start + width) {
      ++id;
      start = values[idx];
    }
    ids[idx] = id;
  }
  *clusters = id + 1;
  return ids;
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kRelativelyCompact: return "RelativelyCompact";
    case Verdict::kNotRelativelyCompact: return "NotRelativelyCompact";
    case Verdict::kInconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

ExactAnalysis::ExactAnalysis(const ExactFamily& family,
                             const WallmanSpace& space)
    : family_(&family), space_(&space) {
  require_nonempty(family);
  const auto points = space.points();
  const int sites = space.space().site_count();
  const std::size_t n = family.functions.size();
  const GammaTransform gamma = gamma_transform(family.functions, space);
  limits_.reserve(n);
  for (const auto& table : gamma.tables) limits_.push_back(table.limits);

  deviation_.assign(n, {});
  for (std::size_t f = 0; f < n; ++f) {
    const BoundedFunction& fn = family.functions[f];
    deviation_[f].assign(points.size(), {});
    for (std::size_t k = 0; k < points.size(); ++k) {
      auto& row = deviation_[f][k];
      row.reserve(static_cast<std::size_t>(sites));
      for (int s = 0; s < sites; ++s) {
        row.push_back(abs_value(fn.at_site(s) - limits_[f][k]));
      }
    }
  }
  distances_.assign(n, std::vector<Rational>(n));
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = f + 1; g < n; ++g) {
      distances_[f][g] = sup_distance(family.functions[f], family.functions[g]);
      distances_[g][f] = distances_[f][g];
    }
  }
}

AA1Result ExactAnalysis::aa1() const { return check_AA1(*family_); }

AA2Result ExactAnalysis::aa2(const Rational& eps,
                             std::span<const std::size_t> members,
                             bool principal_only) const {
  require_positive(eps);
  std::vector<std::size_t> chosen(members.begin(), members.end());
  if (chosen.empty()) {
    chosen.resize(size());
    std::iota(chosen.begin(), chosen.end(), 0);
  }
  const GroundSpace& ground = space_->space();
  const auto points = space_->points();
  const auto opens = space_->opens();
  const int sites = ground.site_count();

  AA2Result result;
  result.eps = eps;
  result.passed = true;
  result.neighborhoods.assign(points.size(), std::nullopt);

  std::vector<std::vector<int>> open_sites;
  open_sites.reserve(opens.size());
  for (const auto& o : opens) open_sites.push_back(ground.sites_of(o));

  for (std::size_t k = 0; k < points.size(); ++k) {
    if (principal_only && !points[k].principal) continue;
    std::vector<Rational> worst(static_cast<std::size_t>(sites));
    for (std::size_t f : chosen) {
      for (int s = 0; s < sites; ++s) {
        const auto us = static_cast<std::size_t>(s);
        worst[us] = std::max(worst[us], deviation_[f][k][us]);
      }
    }
    std::optional<Rational> best;
    std::optional<std::size_t> best_open;
    for (std::size_t o = 0; o < opens.size(); ++o) {
      if (!space_->base_set(o).test(k)) continue;
      Rational dev = 0;
      for (int s : open_sites[o]) dev = std::max(dev, worst[static_cast<std::size_t>(s)]);
      if (dev < eps) {
        result.neighborhoods[k] = o;
        break;
      }
      if (!best || dev < *best) {
        best = dev;
        best_open = o;
      }
    }
    if (!result.neighborhoods[k]) {
      if (result.passed) result.obstruction = AA2Obstruction{k, best, best_open};
      result.passed = false;
    }
  }
  return result;
}

ClosenessMatrix ExactAnalysis::closeness(const Rational& eps) const {
  return closeness_matrix(size(), [&](std::size_t i, std::size_t j) {
    return distances_[i][j] <= eps;
  });
}

AA1Result check_AA1(const ExactFamily& family) {
  require_nonempty(family);
  const GroundSpace& space = family.functions.front().space();
  AA1Result result;
  result.passed = true;
  result.max_spread = -1;
  for (int s = 0; s < space.site_count(); ++s) {
    Rational lo = family.functions.front().at_site(s);
    Rational hi = lo;
    for (const auto& f : family.functions) {
      lo = std::min(lo, f.at_site(s));
      hi = std::max(hi, f.at_site(s));
    }
    if (hi - lo > result.max_spread) {
      result.max_spread = hi - lo;
      result.argmax_site = s;
    }
  }
  return result;
}

AA2Result check_AA2(const ExactFamily& family, const WallmanSpace& space,
                    const Rational& eps) {
  return ExactAnalysis(family, space).aa2(eps);
}

DiscreteKP2Result check_discrete_KP2(const ExactFamily& family,
                                     const WallmanSpace& space,
                                     const Rational& eps) {
  require_nonempty(family);
  require_positive(eps);
  const GroundSpace& ground = space.space();
  const auto points = space.points();
  const auto opens = space.opens();

  DiscreteKP2Result result;
  result.eps = eps;
  result.passed = true;
  for (int s = 0; s < ground.site_count(); ++s) {
    if (!space.trace_is_maximal(s)) continue;
    if (!points[space.principal_of_site(s)].principal) continue;
    result.sites.push_back(s);
    std::optional<std::size_t> found;
    for (std::size_t o = 0; o < opens.size() && !found; ++o) {
      if (!ground.has_site(opens[o], s)) continue;
      bool ok = true;
      for (int t : ground.sites_of(opens[o])) {
        for (const auto& f : family.functions) {
          if (!(abs_value(f.at_site(t) - f.at_site(s)) < eps)) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) found = o;
    }
    result.neighborhoods.push_back(found);
    if (!found && result.passed) {
      result.passed = false;
      result.failing_site = s;
    }
  }
  return result;
}

NetResult epsilon_net_oracle(const ExactFamily& family, const Rational& eps) {
  require_nonempty(family);
  require_positive(eps);
  const auto& fs = family.functions;
  return minimum_net(closeness_matrix(fs.size(), [&](std::size_t i, std::size_t j) {
    return sup_distance(fs[i], fs[j]) <= eps;
  }));
}

bool ExactCertificate::cross_check_passed() const {
  return std::all_of(scales.begin(), scales.end(), [](const ExactScaleResult& s) {
    return s.forward.holds && s.backward.holds;
  });
}

ExactCertificate certify_exact(const ExactFamily& family,
                               const WallmanSpace& space,
                               std::span<const Rational> eps_grid) {
  if (eps_grid.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "empty epsilon grid");
  }
  const ExactAnalysis analysis(family, space);
  const GroundSpace& ground = space.space();
  const auto points = space.points();
  const std::size_t n = analysis.size();

  ExactCertificate cert;
  cert.label = family.label;
  cert.aa1 = analysis.aa1();
  bool all_aa2 = true;

  for (const auto& eps : eps_grid) {
    require_positive(eps);
    ExactScaleResult scale;
    scale.eps = eps;
    scale.aa2 = analysis.aa2(eps);
    all_aa2 = all_aa2 && scale.aa2.passed;
    const ClosenessMatrix close = analysis.closeness(eps);
    scale.net = minimum_net(close);

    // AA1 ∧ AA2(ε/3) ⇒ the ε/3-cells of limit values give an ε-net.
    const Rational third = eps / 3;
    scale.aa2_third = analysis.aa2(third);
    if (cert.aa1.passed && scale.aa2_third.passed) {
      ForwardCheck& fwd = scale.forward;
      fwd.applicable = true;
      LatticeElement covered;
      for (std::size_t k = 0; k < points.size(); ++k) {
        covered = covered | space.opens()[*scale.aa2_third.neighborhoods[k]];
      }
      std::vector<std::vector<int>> keys(n);
      fwd.cluster_product = 1;
      auto add_coordinate = [&](const std::vector<Rational>& values) {
        int clusters = 0;
        const std::vector<int> ids = cluster_ids(values, third, &clusters);
        for (std::size_t f = 0; f < n; ++f) keys[f].push_back(ids[f]);
        fwd.cluster_product = saturating_mul(
            fwd.cluster_product, static_cast<std::size_t>(clusters));
      };
      for (std::size_t k = 0; k < points.size(); ++k) {
        std::vector<Rational> values;
        for (std::size_t f = 0; f < n; ++f) values.push_back(analysis.limit(f, k));
        add_coordinate(values);
      }
      for (int s = 0; s < ground.site_count(); ++s) {
        if (ground.has_site(covered, s)) continue;
        std::vector<Rational> values;
        for (const auto& fn : family.functions) values.push_back(fn.at_site(s));
        add_coordinate(values);
      }
      std::map<std::vector<int>, std::size_t> representative;
      for (std::size_t f = 0; f < n; ++f) representative.emplace(keys[f], f);
      fwd.cell_count = representative.size();
      fwd.cells_form_net = true;
      for (std::size_t f = 0; f < n; ++f) {
        if (!close[representative.at(keys[f])].test(f)) fwd.cells_form_net = false;
      }
      fwd.holds = fwd.cells_form_net && scale.net.size() <= fwd.cell_count;
    }

    // A net that is itself ω-equicontinuous at ε forces AA2 at 3ε.
    scale.net_aa2 = analysis.aa2(eps, scale.net.net);
    scale.aa2_triple = analysis.aa2(3 * eps);
    scale.backward.applicable = scale.net_aa2.passed;
    scale.backward.holds = !scale.net_aa2.passed || scale.aa2_triple.passed;

    cert.scales.push_back(std::move(scale));
  }
  cert.verdict = cert.aa1.passed && all_aa2 ? Verdict::kRelativelyCompact
                                            : Verdict::kNotRelativelyCompact;
  return cert;
}

}  // namespace wallman
