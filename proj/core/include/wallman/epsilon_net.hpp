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

#ifndef WALLMAN_EPSILON_NET_HPP_
#define WALLMAN_EPSILON_NET_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace wallman {

/// Dense bitset over family members.
class MemberSet {
 public:
  MemberSet() = default;
  explicit MemberSet(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const;
  bool none() const;
  /// Lowest member; size() when empty.
  std::size_t first() const;
  MemberSet operator&(const MemberSet& other) const;
  MemberSet& operator&=(const MemberSet& other);
  MemberSet& subtract(const MemberSet& other);
  bool subset_of(const MemberSet& other) const;
  friend bool operator==(const MemberSet&, const MemberSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Closed-ball adjacency: row i holds every j with d(i, j) ≤ ε.
using ClosenessMatrix = std::vector<MemberSet>;

ClosenessMatrix closeness_matrix(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& close);

/// Restriction of a closeness matrix to the listed members, renumbered.
ClosenessMatrix restrict_matrix(const ClosenessMatrix& full,
                                std::span<const std::size_t> members);

struct NetResult {
  /// Member indices, ascending.
  std::vector<std::size_t> net;
  std::size_t greedy_size = 0;
  /// The search finished, so `net` has minimum size.
  bool exact = false;

  std::size_t size() const { return net.size(); }
};

/// Greedy cover (largest gain first, lowest index on ties), then an exact
/// branch-and-bound search for a smaller cover. The search branches on the
/// lowest uncovered member, skips dominated candidates, and stops after
/// `node_budget` nodes, keeping the best cover found.
NetResult minimum_net(const ClosenessMatrix& close,
                      std::size_t node_budget = 2'000'000);

/// True iff every member is within the closed ball of some net member.
bool is_net(const ClosenessMatrix& close, std::span<const std::size_t> net);

}  // namespace wallman

#endif  // WALLMAN_EPSILON_NET_HPP_
