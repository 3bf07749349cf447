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

// Ground spaces, their representable subsets, and finitely generated
// ∩/∪-closed lattices of such subsets (the zero-set lattices every other
// module is built on).
//
// Two kinds of discrete ground space are supported:
//
//   * Finite(n): the points 0..n-1, n <= 64.
//   * EventuallyPeriodicNat(p, k): the natural numbers, where a subset is
//     fixed by its membership on the prefix 0..k-1 and, past the prefix, by
//     the residue t mod p. Both k and p are at most 64.
//
// Internally both kinds are handled through "sites": site s < k is the point
// s itself, site k + r stands for the infinite residue class
// { t >= k : t mod p == r }. A finite space is the special case k = n, p = 0.
// Every representable subset is a union of sites, so all set algebra reduces
// to bitmask operations and is exact.

#ifndef WALLMAN_GROUND_LATTICE_HPP_
#define WALLMAN_GROUND_LATTICE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wallman {

inline constexpr int kMaxSites = 128;

/// A representable subset of a ground space. `head` holds the prefix points,
/// `tail` the residue classes past the prefix (always zero on finite spaces).
/// Within one space this representation is canonical: equal masks iff equal
/// sets. Ordering is lexicographic on (head, tail) and fixes every iteration
/// order in the library.
struct LatticeElement {
  std::uint64_t head = 0;
  std::uint64_t tail = 0;

  friend constexpr auto operator<=>(const LatticeElement&,
                                    const LatticeElement&) = default;

  constexpr bool empty() const { return head == 0 && tail == 0; }
  constexpr bool infinite() const { return tail != 0; }
  constexpr bool subset_of(const LatticeElement& other) const {
    return (head & ~other.head) == 0 && (tail & ~other.tail) == 0;
  }
  constexpr bool intersects(const LatticeElement& other) const {
    return (head & other.head) != 0 || (tail & other.tail) != 0;
  }
  friend constexpr LatticeElement operator&(const LatticeElement& a,
                                            const LatticeElement& b) {
    return {a.head & b.head, a.tail & b.tail};
  }
  friend constexpr LatticeElement operator|(const LatticeElement& a,
                                            const LatticeElement& b) {
    return {a.head | b.head, a.tail | b.tail};
  }
};

struct LatticeElementHash {
  std::size_t operator()(const LatticeElement& e) const noexcept {
    return static_cast<std::size_t>(e.head * 0x9E3779B97F4A7C15ULL ^
                                    (e.tail + 0x632BE59BD9B4E019ULL));
  }
};

/// Minimal textual form of a subset: little-endian bitstrings, '1' = member.
/// `periodic` is indexed by absolute residue t mod |periodic| and applies to
/// every point at or beyond |prefix|.
struct BitPattern {
  std::string prefix;
  std::string periodic;

  friend bool operator==(const BitPattern&, const BitPattern&) = default;
};

class GroundSpace {
 public:
  enum class Kind { kFinite, kEventuallyPeriodicNat };

  static GroundSpace finite(int size);
  static GroundSpace natural(int period, int prefix_length);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  /// Number of points for finite spaces; the prefix length for ℕ models.
  int prefix_length() const { return prefix_; }
  /// Zero for finite spaces.
  int period() const { return period_; }
  int size() const { return prefix_; }
  int site_count() const { return prefix_ + period_; }

  bool is_residue_site(int site) const { return site >= prefix_; }
  int site_of_point(std::uint64_t point) const;
  /// Smallest point represented by a site.
  std::uint64_t representative_point(int site) const;
  std::string site_label(int site) const;

  LatticeElement empty_set() const { return {}; }
  LatticeElement full_set() const { return {head_mask(), tail_mask()}; }
  LatticeElement complement(const LatticeElement& e) const {
    return {~e.head & head_mask(), ~e.tail & tail_mask()};
  }
  LatticeElement site_set(int site) const;
  bool has_site(const LatticeElement& e, int site) const;
  bool contains_point(const LatticeElement& e, std::uint64_t point) const;
  bool in_space(const LatticeElement& e) const {
    return e.subset_of(full_set());
  }
  std::vector<int> sites_of(const LatticeElement& e) const;

  /// Canonicalizes a textual subset into this space. The periodic pattern is
  /// first reduced to its minimal period, which must divide the space's
  /// period; prefix bits that reach past the space's prefix must agree with
  /// the periodic pattern. Throws kGeneratorNotInSpace otherwise.
  LatticeElement parse(std::string_view prefix,
                       std::string_view periodic = {}) const;
  /// Inverse of parse, with minimal period and minimal prefix.
  BitPattern describe(const LatticeElement& e) const;

  friend bool operator==(const GroundSpace&, const GroundSpace&) = default;

 private:
  GroundSpace(Kind kind, int period, int prefix)
      : kind_(kind), period_(period), prefix_(prefix) {}

  std::uint64_t head_mask() const;
  std::uint64_t tail_mask() const;

  Kind kind_;
  int period_;
  int prefix_;
};

struct GenerationLimits {
  std::size_t max_generators = 16;
  std::size_t max_elements = 4096;
};

/// A finite family of subsets closed under ∩ and ∪ and containing ∅ and the
/// whole space. Elements are kept sorted in canonical order.
class ZeroSetLattice {
 public:
  const GroundSpace& space() const { return space_; }
  std::span<const LatticeElement> elements() const { return elements_; }
  std::span<const LatticeElement> generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }
  const LatticeElement& operator[](std::size_t i) const {
    return elements_[i];
  }

  std::optional<std::size_t> index_of(const LatticeElement& e) const;
  bool contains(const LatticeElement& e) const {
    return index_of(e).has_value();
  }

 private:
  friend ZeroSetLattice generate_lattice(const GroundSpace&,
                                         std::span<const LatticeElement>,
                                         GenerationLimits);

  ZeroSetLattice(GroundSpace space, std::vector<LatticeElement> generators,
                 std::vector<LatticeElement> elements)
      : space_(space),
        generators_(std::move(generators)),
        elements_(std::move(elements)) {}

  GroundSpace space_;
  std::vector<LatticeElement> generators_;
  std::vector<LatticeElement> elements_;
};

ZeroSetLattice generate_lattice(const GroundSpace& space,
                                std::span<const LatticeElement> generators,
                                GenerationLimits limits = {});

/// The full lattice of representable subsets, generated by the sites.
ZeroSetLattice power_set_lattice(const GroundSpace& space,
                                 GenerationLimits limits = {});

/// Minimal nonempty elements, in canonical order. Distinct atoms of an
/// ∩-closed lattice are disjoint.
std::vector<LatticeElement> atoms(const ZeroSetLattice& lattice);

/// Union of all atoms. Points outside it have no maximal trace filter.
LatticeElement atom_cover(const ZeroSetLattice& lattice);

struct SeparationWitness {
  LatticeElement u;
  LatticeElement v;
};

struct SeparationResult {
  std::optional<SeparationWitness> witness;
  /// Candidate pairs (U ⊇ A, V ⊇ B) that overlap, first few in search order.
  std::vector<std::pair<LatticeElement, LatticeElement>> blocking;
  std::size_t candidate_pairs = 0;

  bool separated() const { return witness.has_value(); }
};

/// Looks for disjoint opens U ⊇ a, V ⊇ b. Without an explicit open family the
/// space is discrete and (a, b) separates itself. Throws kNotDisjoint when
/// a ∩ b ≠ ∅.
SeparationResult separation_check(
    const ZeroSetLattice& lattice, const LatticeElement& a,
    const LatticeElement& b,
    std::optional<std::span<const LatticeElement>> opens = std::nullopt);

}  // namespace wallman

#endif  // WALLMAN_GROUND_LATTICE_HPP_
