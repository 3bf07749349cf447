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

#include "wallman/ground_lattice.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "wallman/error.hpp"

namespace wallman {
namespace {

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_bits(std::string_view bits, std::string_view what) {
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::kInvalidInput,
                  std::string(what) + " bitstring contains '" +
                      std::string(1, c) + "'");
    }
  }
}

// Smallest m dividing |q| such that q is m-periodic.
std::size_t minimal_period(std::string_view q) {
  const std::size_t n = q.size();
  for (std::size_t m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    bool periodic = true;
    for (std::size_t i = m; i < n && periodic; ++i) periodic = q[i] == q[i % m];
    if (periodic) return m;
  }
  return n;
}

}  // namespace

GroundSpace GroundSpace::finite(int size) {
  if (size < 1 || size > 64) {
    throw Error(ErrorCode::kInvalidSpace,
                "finite size must lie in 1..64, got " + std::to_string(size));
  }
  return GroundSpace(Kind::kFinite, 0, size);
}

GroundSpace GroundSpace::natural(int period, int prefix_length) {
  if (period < 1 || period > 64) {
    throw Error(ErrorCode::kInvalidSpace,
                "period must lie in 1..64, got " + std::to_string(period));
  }
  if (prefix_length < 0 || prefix_length > 64) {
    throw Error(ErrorCode::kInvalidSpace,
                "prefix must lie in 0..64, got " +
                    std::to_string(prefix_length));
  }
  return GroundSpace(Kind::kEventuallyPeriodicNat, period, prefix_length);
}

std::uint64_t GroundSpace::head_mask() const { return low_bits(prefix_); }
std::uint64_t GroundSpace::tail_mask() const { return low_bits(period_); }

int GroundSpace::site_of_point(std::uint64_t point) const {
  if (point < static_cast<std::uint64_t>(prefix_)) return static_cast<int>(point);
  if (is_finite()) {
    throw Error(ErrorCode::kInvalidInput,
                "point " + std::to_string(point) + " outside Finite(" +
                    std::to_string(prefix_) + ")");
  }
  return prefix_ + static_cast<int>(point % static_cast<std::uint64_t>(period_));
}

std::uint64_t GroundSpace::representative_point(int site) const {
  if (site < prefix_) return static_cast<std::uint64_t>(site);
  const int r = site - prefix_;
  const int offset = ((r - prefix_) % period_ + period_) % period_;
  return static_cast<std::uint64_t>(prefix_ + offset);
}

std::string GroundSpace::site_label(int site) const {
  if (site < prefix_) return std::to_string(site);
  return "t>=" + std::to_string(prefix_) + ",t%" + std::to_string(period_) +
         "==" + std::to_string(site - prefix_);
}

LatticeElement GroundSpace::site_set(int site) const {
  if (site < 0 || site >= site_count()) {
    throw Error(ErrorCode::kInvalidInput,
                "site " + std::to_string(site) + " out of range");
  }
  if (site < prefix_) return {std::uint64_t{1} << site, 0};
  return {0, std::uint64_t{1} << (site - prefix_)};
}

bool GroundSpace::has_site(const LatticeElement& e, int site) const {
  if (site < prefix_) return (e.head >> site) & 1U;
  return (e.tail >> (site - prefix_)) & 1U;
}

bool GroundSpace::contains_point(const LatticeElement& e,
                                 std::uint64_t point) const {
  return has_site(e, site_of_point(point));
}

std::vector<int> GroundSpace::sites_of(const LatticeElement& e) const {
  std::vector<int> sites;
  for (std::uint64_t h = e.head; h != 0; h &= h - 1) {
    sites.push_back(std::countr_zero(h));
  }
  for (std::uint64_t t = e.tail; t != 0; t &= t - 1) {
    sites.push_back(prefix_ + std::countr_zero(t));
  }
  return sites;
}

LatticeElement GroundSpace::parse(std::string_view prefix,
                                  std::string_view periodic) const {
  check_bits(prefix, "prefix");
  check_bits(periodic, "periodic");
  LatticeElement e;
  if (is_finite()) {
    if (periodic.find('1') != std::string_view::npos) {
      throw Error(ErrorCode::kGeneratorNotInSpace,
                  "finite spaces have no periodic part");
    }
    for (std::size_t t = 0; t < prefix.size(); ++t) {
      if (prefix[t] != '1') continue;
      if (t >= static_cast<std::size_t>(prefix_)) {
        throw Error(ErrorCode::kGeneratorNotInSpace,
                    "point " + std::to_string(t) + " outside Finite(" +
                        std::to_string(prefix_) + ")");
      }
      e.head |= std::uint64_t{1} << t;
    }
    return e;
  }

  std::string q = periodic.empty() ? std::string("0") : std::string(periodic);
  const std::size_t m = minimal_period(q);
  q.resize(m);
  if (static_cast<std::size_t>(period_) % m != 0) {
    throw Error(ErrorCode::kGeneratorNotInSpace,
                "minimal period " + std::to_string(m) +
                    " does not divide the space period " +
                    std::to_string(period_));
  }
  for (std::size_t t = prefix_; t < prefix.size(); ++t) {
    if (prefix[t] != q[t % m]) {
      throw Error(ErrorCode::kGeneratorNotInSpace,
                  "prefix bit " + std::to_string(t) +
                      " lies past the space prefix and disagrees with the "
                      "periodic pattern");
    }
  }
  for (int t = 0; t < prefix_; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    const char bit = ut < prefix.size() ? prefix[ut] : q[ut % m];
    if (bit == '1') e.head |= std::uint64_t{1} << t;
  }
  for (int r = 0; r < period_; ++r) {
    if (q[static_cast<std::size_t>(r) % m] == '1') {
      e.tail |= std::uint64_t{1} << r;
    }
  }
  return e;
}

BitPattern GroundSpace::describe(const LatticeElement& e) const {
  BitPattern out;
  if (is_finite()) {
    const int top = e.head == 0 ? 0 : 64 - std::countl_zero(e.head);
    for (int t = 0; t < top; ++t) out.prefix += ((e.head >> t) & 1U) ? '1' : '0';
    return out;
  }
  std::string full;
  for (int r = 0; r < period_; ++r) full += ((e.tail >> r) & 1U) ? '1' : '0';
  const std::size_t m = minimal_period(full);
  out.periodic = full.substr(0, m);
  int keep = prefix_;
  while (keep > 0) {
    const int t = keep - 1;
    const char bit = ((e.head >> t) & 1U) ? '1' : '0';
    if (bit != out.periodic[static_cast<std::size_t>(t) % m]) break;
    --keep;
  }
  for (int t = 0; t < keep; ++t) out.prefix += ((e.head >> t) & 1U) ? '1' : '0';
  return out;
}

std::optional<std::size_t> ZeroSetLattice::index_of(
    const LatticeElement& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

ZeroSetLattice generate_lattice(const GroundSpace& space,
                                std::span<const LatticeElement> generators,
                                GenerationLimits limits) {
  if (generators.size() > limits.max_generators) {
    throw Error(ErrorCode::kTooManyGenerators,
                std::to_string(generators.size()) + " generators, limit " +
                    std::to_string(limits.max_generators));
  }
  for (const auto& g : generators) {
    if (!space.in_space(g)) {
      throw Error(ErrorCode::kGeneratorNotInSpace,
                  "generator has members outside the ground space");
    }
  }

  std::vector<LatticeElement> elements;
  std::unordered_set<LatticeElement, LatticeElementHash> seen;
  auto add = [&](const LatticeElement& e) {
    if (!seen.insert(e).second) return;
    if (elements.size() >= limits.max_elements) {
      throw Error(ErrorCode::kLatticeTooLarge,
                  "closure exceeds " + std::to_string(limits.max_elements) +
                      " elements");
    }
    elements.push_back(e);
  };
  add(space.empty_set());
  add(space.full_set());
  for (const auto& g : generators) add(g);

  // Each element is combined with every earlier one exactly once; elements
  // appended along the way are reached by the outer loop later.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const LatticeElement a = elements[i];
      const LatticeElement b = elements[j];
      add(a & b);
      add(a | b);
    }
  }
  std::sort(elements.begin(), elements.end());

  std::vector<LatticeElement> gens(generators.begin(), generators.end());
  return ZeroSetLattice(space, std::move(gens), std::move(elements));
}

ZeroSetLattice power_set_lattice(const GroundSpace& space,
                                 GenerationLimits limits) {
  std::vector<LatticeElement> singletons;
  for (int s = 0; s < space.site_count(); ++s) {
    singletons.push_back(space.site_set(s));
  }
  limits.max_generators = std::max(limits.max_generators, singletons.size());
  return generate_lattice(space, singletons, limits);
}

std::vector<LatticeElement> atoms(const ZeroSetLattice& lattice) {
  std::vector<LatticeElement> result;
  const auto elements = lattice.elements();
  for (const auto& e : elements) {
    if (e.empty()) continue;
    const bool minimal = std::none_of(
        elements.begin(), elements.end(), [&](const LatticeElement& other) {
          return !other.empty() && other != e && other.subset_of(e);
        });
    if (minimal) result.push_back(e);
  }
  return result;
}

LatticeElement atom_cover(const ZeroSetLattice& lattice) {
  LatticeElement cover;
  for (const auto& a : atoms(lattice)) cover = cover | a;
  return cover;
}

SeparationResult separation_check(
    const ZeroSetLattice& lattice, const LatticeElement& a,
    const LatticeElement& b,
    std::optional<std::span<const LatticeElement>> opens) {
  const GroundSpace& space = lattice.space();
  if (!space.in_space(a) || !space.in_space(b)) {
    throw Error(ErrorCode::kGeneratorNotInSpace,
                "separated sets must lie in the ground space");
  }
  if (a.intersects(b)) {
    throw Error(ErrorCode::kNotDisjoint, "sets to separate must be disjoint");
  }
  SeparationResult result;
  if (!opens) {
    result.candidate_pairs = 1;
    result.witness = SeparationWitness{a, b};
    return result;
  }
  std::vector<LatticeElement> family(opens->begin(), opens->end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  constexpr std::size_t kMaxBlocking = 16;
  for (const auto& u : family) {
    if (!a.subset_of(u)) continue;
    for (const auto& v : family) {
      if (!b.subset_of(v)) continue;
      ++result.candidate_pairs;
      if (!u.intersects(v)) {
        result.witness = SeparationWitness{u, v};
        return result;
      }
      if (result.blocking.size() < kMaxBlocking) {
        result.blocking.emplace_back(u, v);
      }
    }
  }
  return result;
}

}  // namespace wallman
