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

// Brute-force reference implementations used to derive expected values.
// They share no code with the library beyond the element encoding: sets are
// plain vectors of site flags and every search is exhaustive.

#ifndef WALLMAN_TESTS_ORACLES_HPP_
#define WALLMAN_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "wallman/ground_lattice.hpp"

namespace wallman::oracle {

using SiteSet = std::vector<bool>;

inline SiteSet to_sites(const GroundSpace& space, const LatticeElement& e) {
  SiteSet s(static_cast<std::size_t>(space.site_count()), false);
  for (int i = 0; i < space.site_count(); ++i) {
    const bool bit = i < space.prefix_length()
                         ? ((e.head >> i) & 1U) != 0
                         : ((e.tail >> (i - space.prefix_length())) & 1U) != 0;
    s[static_cast<std::size_t>(i)] = bit;
  }
  return s;
}

inline SiteSet meet(const SiteSet& a, const SiteSet& b) {
  SiteSet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

inline SiteSet join(const SiteSet& a, const SiteSet& b) {
  SiteSet out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

inline bool is_empty(const SiteSet& a) {
  return std::none_of(a.begin(), a.end(), [](bool b) { return b; });
}

inline bool subset(const SiteSet& a, const SiteSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

/// Fixed point of pairwise ∪ and ∩ starting from {∅, T} ∪ generators.
inline std::set<SiteSet> closure(std::size_t sites,
                                 const std::vector<SiteSet>& generators) {
  std::set<SiteSet> out{SiteSet(sites, false), SiteSet(sites, true)};
  out.insert(generators.begin(), generators.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<SiteSet> snapshot(out.begin(), out.end());
    for (const auto& a : snapshot) {
      for (const auto& b : snapshot) {
        grew |= out.insert(meet(a, b)).second;
        grew |= out.insert(join(a, b)).second;
      }
    }
  }
  return out;
}

/// Minimal nonempty members.
inline std::set<SiteSet> atoms(const std::set<SiteSet>& lattice) {
  std::set<SiteSet> out;
  for (const auto& a : lattice) {
    if (is_empty(a)) continue;
    bool minimal = true;
    for (const auto& b : lattice) {
      if (!is_empty(b) && b != a && subset(b, a)) minimal = false;
    }
    if (minimal) out.insert(a);
  }
  return out;
}

/// Every maximal subfamily with the finite intersection property, as bit masks
/// over `elements`. Exhaustive over all 2^n subfamilies; n ≤ 16.
inline std::set<std::uint32_t> ultrafilters(const std::vector<SiteSet>& elements) {
  const std::size_t n = elements.size();
  const std::size_t sites = n == 0 ? 0 : elements.front().size();
  const auto fip = [&](std::uint32_t mask) {
    SiteSet common(sites, true);
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) common = meet(common, elements[i]);
    }
    return !is_empty(common);
  };
  std::set<std::uint32_t> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (!fip(mask)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i) {
      if (!((mask >> i) & 1U) && fip(mask | (std::uint32_t{1} << i))) maximal = false;
    }
    if (maximal) out.insert(mask);
  }
  return out;
}

/// Smallest k such that some k members cover everyone with closed balls.
/// Exhaustive over subsets in order of size; n ≤ 16.
inline std::size_t min_net_size(std::size_t n,
                                const std::function<bool(std::size_t, std::size_t)>& close) {
  if (n == 0) return 0;
  std::size_t best = n;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    bool covers = true;
    for (std::size_t j = 0; j < n && covers; ++j) {
      bool hit = false;
      for (std::size_t i = 0; i < n && !hit; ++i) {
        hit = ((mask >> i) & 1U) && close(i, j);
      }
      covers = hit;
    }
    if (covers) best = k;
  }
  return best;
}

/// Minimum number of closed ε-balls centred at the given reals that cover
/// them all. Sweep from the left: the leftmost uncovered value is served by
/// the rightmost centre within ε of it, which is optimal on the line.
inline std::size_t covering_count_1d(std::vector<double> values, double eps,
                                     double slack = 1e-12) {
  std::sort(values.begin(), values.end());
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < values.size()) {
    const double left = values[i];
    std::size_t c = i;
    while (c + 1 < values.size() && values[c + 1] <= left + eps + slack) ++c;
    const double centre = values[c];
    ++count;
    while (i < values.size() && values[i] <= centre + eps + slack) ++i;
  }
  return count;
}

/// Elements of the free bounded distributive lattice on n generators: an
/// upper bound on the size of any lattice generated by n sets with ∅ and T.
inline constexpr std::uint64_t kDedekind[] = {2, 3, 6, 20, 168, 7581, 7828354};

}  // namespace wallman::oracle

#endif  // WALLMAN_TESTS_ORACLES_HPP_
