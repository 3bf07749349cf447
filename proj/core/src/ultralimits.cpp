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

#include "wallman/ultralimits.hpp"

#include <algorithm>
#include <string>

namespace wallman {
namespace {

void require_same_space(const GroundSpace& a, const GroundSpace& b) {
  if (a != b) {
    throw Error(ErrorCode::kInvalidInput,
                "functions live on different ground spaces");
  }
}

}  // namespace

BoundedFunction::BoundedFunction(GroundSpace space,
                                 std::vector<Rational> site_values)
    : space_(space), values_(std::move(site_values)) {
  if (values_.size() != static_cast<std::size_t>(space_.site_count())) {
    throw Error(ErrorCode::kInvalidInput,
                "expected " + std::to_string(space_.site_count()) +
                    " site values, got " + std::to_string(values_.size()));
  }
}

BoundedFunction BoundedFunction::finite(const GroundSpace& space,
                                        std::vector<Rational> values) {
  if (!space.is_finite()) {
    throw Error(ErrorCode::kInvalidInput, "finite function on an ℕ model");
  }
  return BoundedFunction(space, std::move(values));
}

BoundedFunction BoundedFunction::natural(
    const GroundSpace& space, std::vector<Rational> prefix_values,
    const std::map<int, Rational>& asymptotics) {
  if (space.is_finite()) {
    throw Error(ErrorCode::kInvalidInput, "ℕ function on a finite space");
  }
  const int k = space.prefix_length();
  const int p = space.period();
  if (prefix_values.size() > static_cast<std::size_t>(k)) {
    throw Error(ErrorCode::kInvalidInput,
                "more prefix values than the prefix length " +
                    std::to_string(k));
  }
  for (const auto& [residue, value] : asymptotics) {
    if (residue < 0 || residue >= p) {
      throw Error(ErrorCode::kInvalidInput,
                  "residue " + std::to_string(residue) + " outside 0.." +
                      std::to_string(p - 1));
    }
  }
  std::vector<Rational> values(static_cast<std::size_t>(k + p));
  for (int r = 0; r < p; ++r) {
    auto it = asymptotics.find(r);
    if (it == asymptotics.end()) {
      throw Error(ErrorCode::kInvalidInput,
                  "missing eventual value for residue " + std::to_string(r));
    }
    values[static_cast<std::size_t>(k + r)] = it->second;
  }
  for (int t = 0; t < k; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    values[ut] = ut < prefix_values.size()
                     ? prefix_values[ut]
                     : values[static_cast<std::size_t>(k + t % p)];
  }
  return BoundedFunction(space, std::move(values));
}

BoundedFunction BoundedFunction::constant(const GroundSpace& space,
                                          const Rational& c) {
  return BoundedFunction(
      space, std::vector<Rational>(static_cast<std::size_t>(space.site_count()), c));
}

Rational BoundedFunction::sup_norm() const {
  Rational best = 0;
  for (const auto& v : values_) best = std::max(best, abs_value(v));
  return best;
}

BoundedFunction operator+(const BoundedFunction& a, const BoundedFunction& b) {
  require_same_space(a.space_, b.space_);
  std::vector<Rational> values(a.values_.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = a.values_[i] + b.values_[i];
  }
  return BoundedFunction(a.space_, std::move(values));
}

BoundedFunction operator*(const Rational& c, const BoundedFunction& f) {
  std::vector<Rational> values(f.values_.size());
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = c * f.values_[i];
  return BoundedFunction(f.space_, std::move(values));
}

Rational sup_distance(const BoundedFunction& f, const BoundedFunction& g) {
  require_same_space(f.space(), g.space());
  Rational best = 0;
  const auto a = f.site_values();
  const auto b = g.site_values();
  for (std::size_t i = 0; i < a.size(); ++i) {
    best = std::max(best, abs_value(a[i] - b[i]));
  }
  return best;
}

Rational ultrafilter_limit(const BoundedFunction& f, const Ultrafilter& u) {
  const GroundSpace& space = f.space();
  if (!space.in_space(u.core) || u.core.empty()) {
    throw Error(ErrorCode::kInvalidInput,
                "ultrafilter does not belong to the function's space");
  }
  // Sites that decide the limit: residue classes for an infinite core,
  // otherwise every (prefix) point of the core.
  const LatticeElement deciding =
      u.core.infinite() ? LatticeElement{0, u.core.tail} : u.core;
  std::vector<Rational> candidates;
  for (int s : space.sites_of(deciding)) candidates.push_back(f.at_site(s));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  if (candidates.size() != 1) {
    throw AmbiguousLimitError(
        "function takes " + std::to_string(candidates.size()) +
            " distinct values on the ultrafilter core",
        std::move(candidates));
  }
  return candidates.front();
}

bool Lemma4Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Lemma4Check& c) { return c.passed; });
}

std::vector<Rational> default_epsilon_grid(const BoundedFunction& f) {
  Rational scale = f.sup_norm();
  if (scale == 0) scale = 1;
  std::vector<Rational> grid;
  Rational eps = scale;
  for (int j = 1; j <= 10; ++j) {
    eps /= 2;
    grid.push_back(eps);
  }
  return grid;
}

Lemma4Report verify_lemma4(const BoundedFunction& f, const Ultrafilter& u,
                           std::span<const Rational> epsilons) {
  const GroundSpace& space = f.space();
  Lemma4Report report;
  report.limit = ultrafilter_limit(f, u);
  for (const auto& eps : epsilons) {
    if (eps <= 0) {
      throw Error(ErrorCode::kInvalidConfig, "epsilon must be positive");
    }
    Lemma4Check check;
    check.eps = eps;
    for (int s = 0; s < space.site_count(); ++s) {
      if (abs_value(f.at_site(s) - report.limit) < eps) {
        check.near_set = check.near_set | space.site_set(s);
      }
    }
    check.passed = !ultrafilter_contains(u, space.complement(check.near_set));
    report.checks.push_back(std::move(check));
  }
  return report;
}

UltraLimitTable extend(const BoundedFunction& f, const WallmanSpace& space) {
  require_same_space(f.space(), space.space());
  UltraLimitTable table;
  for (const auto& u : space.points()) {
    table.limits.push_back(ultrafilter_limit(f, u));
  }
  return table;
}

GammaTransform gamma_transform(std::span<const BoundedFunction> family,
                               const WallmanSpace& space) {
  GammaTransform out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    try {
      out.tables.push_back(extend(family[i], space));
    } catch (const AmbiguousLimitError& e) {
      std::string where = "function " + std::to_string(i);
      const auto points = space.points();
      for (std::size_t k = 0; k < points.size(); ++k) {
        try {
          ultrafilter_limit(family[i], points[k]);
        } catch (const AmbiguousLimitError&) {
          where += ", ultrafilter " + std::to_string(k);
          break;
        }
      }
      throw AmbiguousLimitError(where + ": " + e.what(), e.candidates());
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (out.tables[i] == out.tables[j] && !(family[i] == family[j])) {
        out.collisions.emplace_back(i, j);
      }
    }
  }
  return out;
}

BoundedFunction gamma_inverse(const UltraLimitTable& table,
                              const WallmanSpace& space) {
  if (table.limits.size() != space.points().size()) {
    throw Error(ErrorCode::kInvalidInput,
                "table has " + std::to_string(table.limits.size()) +
                    " entries for " + std::to_string(space.points().size()) +
                    " ultrafilters");
  }
  const GroundSpace& ground = space.space();
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(ground.site_count()));
  for (int s = 0; s < ground.site_count(); ++s) {
    values.push_back(table.limits[space.principal_of_site(s)]);
  }
  return BoundedFunction(ground, std::move(values));
}

ContinuityReport verify_gamma_continuity(const BoundedFunction& f,
                                         const BoundedFunction& g,
                                         const WallmanSpace& space) {
  ContinuityReport report;
  report.ground_distance = sup_distance(f, g);
  const UltraLimitTable ft = extend(f, space);
  const UltraLimitTable gt = extend(g, space);
  Rational d2 = 0;
  for (std::size_t k = 0; k < ft.limits.size(); ++k) {
    d2 = std::max(d2, abs_value(ft.limits[k] - gt.limits[k]));
  }
  report.extended_distance = d2;
  const Rational& d1 = report.ground_distance;
  report.forward_bound = d2 <= 3 * d1;
  report.inverse_bound = d1 <= d2;
  report.equal = d1 == d2;
  if (d1 > 0) report.ratio = Rational(d2 / d1);
  return report;
}

std::pair<Rational, Rational> ultrafilter_limit(const ComplexFunction& f,
                                                const Ultrafilter& u) {
  return {ultrafilter_limit(f.re, u), ultrafilter_limit(f.im, u)};
}

Rational sup_distance(const ComplexFunction& f, const ComplexFunction& g,
                      ComplexMetric metric) {
  require_same_space(f.re.space(), g.re.space());
  const auto fr = f.re.site_values();
  const auto fi = f.im.site_values();
  const auto gr = g.re.site_values();
  const auto gi = g.im.site_values();
  Rational best = 0;
  for (std::size_t s = 0; s < fr.size(); ++s) {
    const Rational dr = abs_value(fr[s] - gr[s]);
    const Rational di = abs_value(fi[s] - gi[s]);
    const Rational d = metric == ComplexMetric::kMaxComponent
                           ? std::max(dr, di)
                           : Rational(dr * dr + di * di);
    best = std::max(best, d);
  }
  return best;
}

}  // namespace wallman
