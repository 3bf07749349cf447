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

// Limits of bounded functions along ultrafilters and the extension f ↦ f̂.
//
// A function on a finite space stores one value per point. On an ℕ model it
// stores one value per prefix point and one eventual value per residue class
// mod the period; past the prefix the function equals its eventual value, so
// the model is exact. All arithmetic is in exact rationals.

#ifndef WALLMAN_ULTRALIMITS_HPP_
#define WALLMAN_ULTRALIMITS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wallman/error.hpp"
#include "wallman/filters.hpp"
#include "wallman/ground_lattice.hpp"
#include "wallman/rational.hpp"
#include "wallman/wallman_space.hpp"

namespace wallman {

class BoundedFunction {
 public:
  /// One value per site of `space`.
  BoundedFunction(GroundSpace space, std::vector<Rational> site_values);

  static BoundedFunction finite(const GroundSpace& space,
                                std::vector<Rational> values);
  /// `prefix_values` may be shorter than the prefix; missing points take the
  /// eventual value of their residue class. Every residue needs a value.
  static BoundedFunction natural(const GroundSpace& space,
                                 std::vector<Rational> prefix_values,
                                 const std::map<int, Rational>& asymptotics);
  static BoundedFunction constant(const GroundSpace& space, const Rational& c);

  const GroundSpace& space() const { return space_; }
  std::span<const Rational> site_values() const { return values_; }
  const Rational& at_site(int site) const {
    return values_[static_cast<std::size_t>(site)];
  }
  const Rational& at_point(std::uint64_t point) const {
    return at_site(space_.site_of_point(point));
  }
  Rational sup_norm() const;

  friend BoundedFunction operator+(const BoundedFunction& a,
                                   const BoundedFunction& b);
  friend BoundedFunction operator*(const Rational& c, const BoundedFunction& f);
  friend bool operator==(const BoundedFunction&, const BoundedFunction&) = default;

 private:
  GroundSpace space_;
  std::vector<Rational> values_;
};

/// sup_t |f(t) − g(t)|, exact.
Rational sup_distance(const BoundedFunction& f, const BoundedFunction& g);

/// Raised when the lattice is too coarse to pin the limit to one value.
class AmbiguousLimitError : public Error {
 public:
  AmbiguousLimitError(const std::string& message,
                      std::vector<Rational> candidates)
      : Error(ErrorCode::kAmbiguousLimit, message),
        candidates_(std::move(candidates)) {}

  const std::vector<Rational>& candidates() const { return candidates_; }

 private:
  std::vector<Rational> candidates_;
};

/// lim_𝒰 f. A finite core forces f to be constant on it; an infinite core
/// forces the eventual values of its residue classes to agree (its prefix
/// points are finitely many exceptions and do not matter).
Rational ultrafilter_limit(const BoundedFunction& f, const Ultrafilter& u);

struct Lemma4Check {
  Rational eps;
  /// { t : |f(t) − lim_𝒰 f| < ε }
  LatticeElement near_set;
  bool passed = false;
};

struct Lemma4Report {
  Rational limit;
  std::vector<Lemma4Check> checks;

  bool passed() const;
};

/// {2⁻¹, …, 2⁻¹⁰}·‖f‖, or plain powers of two when f ≡ 0.
std::vector<Rational> default_epsilon_grid(const BoundedFunction& f);

/// For each ε checks that T ∖ { t : |f(t) − lim_𝒰 f| < ε } ∉ 𝒰.
Lemma4Report verify_lemma4(const BoundedFunction& f, const Ultrafilter& u,
                           std::span<const Rational> epsilons);

struct UltraLimitTable {
  /// Indexed like WallmanSpace::points().
  std::vector<Rational> limits;

  friend bool operator==(const UltraLimitTable&, const UltraLimitTable&) = default;
};

struct GammaTransform {
  std::vector<UltraLimitTable> tables;
  /// Pairs of distinct functions with identical tables.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;

  bool injective() const { return collisions.empty(); }
};

UltraLimitTable extend(const BoundedFunction& f, const WallmanSpace& space);

/// f ↦ f̂ for each function; AmbiguousLimitError names the offending pair.
GammaTransform gamma_transform(std::span<const BoundedFunction> family,
                               const WallmanSpace& space);

/// F ↦ F ∘ ℘.
BoundedFunction gamma_inverse(const UltraLimitTable& table,
                              const WallmanSpace& space);

struct ContinuityReport {
  Rational ground_distance;    // sup_t |f(t) − g(t)|
  Rational extended_distance;  // sup_𝒰 |f̂(𝒰) − ĝ(𝒰)|
  bool forward_bound = false;  // d₂ ≤ 3·d₁
  bool inverse_bound = false;  // d₁ ≤ d₂
  bool equal = false;
  /// d₂ / d₁ when d₁ > 0.
  std::optional<Rational> ratio;

  bool passed() const { return forward_bound && inverse_bound; }
};

ContinuityReport verify_gamma_continuity(const BoundedFunction& f,
                                         const BoundedFunction& g,
                                         const WallmanSpace& space);

// Complex-valued functions as (re, im) pairs.
enum class ComplexMetric { kMaxComponent, kEuclidean };

struct ComplexFunction {
  BoundedFunction re;
  BoundedFunction im;
};

std::pair<Rational, Rational> ultrafilter_limit(const ComplexFunction& f,
                                                const Ultrafilter& u);

/// Sup distance under the chosen metric. The Euclidean modulus is returned
/// squared so that it stays rational.
Rational sup_distance(const ComplexFunction& f, const ComplexFunction& g,
                      ComplexMetric metric);

}  // namespace wallman

#endif  // WALLMAN_ULTRALIMITS_HPP_
