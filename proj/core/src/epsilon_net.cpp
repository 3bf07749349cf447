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

#include "wallman/epsilon_net.hpp"

#include <algorithm>
#include <bit>

namespace wallman {

std::size_t MemberSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool MemberSet::none() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::size_t MemberSet::first() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) {
      return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
    }
  }
  return size_;
}

MemberSet MemberSet::operator&(const MemberSet& other) const {
  MemberSet out = *this;
  out &= other;
  return out;
}

MemberSet& MemberSet::operator&=(const MemberSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

MemberSet& MemberSet::subtract(const MemberSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

bool MemberSet::subset_of(const MemberSet& other) const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

ClosenessMatrix closeness_matrix(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& close) {
  ClosenessMatrix m(n, MemberSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    m[i].set(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (close(i, j)) {
        m[i].set(j);
        m[j].set(i);
      }
    }
  }
  return m;
}

ClosenessMatrix restrict_matrix(const ClosenessMatrix& full,
                                std::span<const std::size_t> members) {
  const std::size_t n = members.size();
  ClosenessMatrix m(n, MemberSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (full[members[i]].test(members[j])) m[i].set(j);
    }
  }
  return m;
}

namespace {

MemberSet everyone(std::size_t n) {
  MemberSet all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  return all;
}

std::vector<std::size_t> greedy_net(const ClosenessMatrix& close) {
  const std::size_t n = close.size();
  MemberSet uncovered = everyone(n);
  std::vector<std::size_t> net;
  while (!uncovered.none()) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t gain = (close[i] & uncovered).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = i;
      }
    }
    net.push_back(best);
    uncovered.subtract(close[best]);
  }
  std::sort(net.begin(), net.end());
  return net;
}

class ExactSearch {
 public:
  ExactSearch(const ClosenessMatrix& close, std::vector<std::size_t> best,
              std::size_t budget)
      : close_(close), best_(std::move(best)), budget_(budget) {}

  void run() {
    std::vector<std::size_t> chosen;
    recurse(everyone(close_.size()), chosen);
  }

  bool finished() const { return nodes_ <= budget_; }
  std::vector<std::size_t> best() const {
    std::vector<std::size_t> out = best_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void recurse(const MemberSet& uncovered, std::vector<std::size_t>& chosen) {
    if (++nodes_ > budget_) return;
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + 1 >= best_.size()) return;

    std::size_t max_gain = 0;
    for (const auto& row : close_) {
      max_gain = std::max(max_gain, (row & uncovered).count());
    }
    const std::size_t remaining = uncovered.count();
    const std::size_t lower = (remaining + max_gain - 1) / max_gain;
    if (chosen.size() + lower >= best_.size()) return;

    // Every cover contains a ball around the lowest uncovered member.
    const std::size_t pivot = uncovered.first();
    struct Candidate {
      std::size_t index;
      MemberSet gain;
      std::size_t count;
    };
    std::vector<Candidate> candidates;
    for (std::size_t i = 0; i < close_.size(); ++i) {
      if (!close_[pivot].test(i)) continue;
      MemberSet gain = close_[i] & uncovered;
      const std::size_t c = gain.count();
      candidates.push_back({i, std::move(gain), c});
    }
    std::vector<bool> dominated(candidates.size(), false);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      for (std::size_t b = 0; b < candidates.size() && !dominated[a]; ++b) {
        if (a == b) continue;
        if (!candidates[a].gain.subset_of(candidates[b].gain)) continue;
        dominated[a] = candidates[a].count < candidates[b].count ||
                       candidates[b].index < candidates[a].index;
      }
    }
    std::vector<Candidate> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!dominated[a]) kept.push_back(std::move(candidates[a]));
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const Candidate& x, const Candidate& y) {
                       return x.count > y.count;
                     });
    for (const auto& c : kept) {
      MemberSet next = uncovered;
      next.subtract(close_[c.index]);
      chosen.push_back(c.index);
      recurse(next, chosen);
      chosen.pop_back();
      if (nodes_ > budget_) return;
    }
  }

  const ClosenessMatrix& close_;
  std::vector<std::size_t> best_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

}  // namespace

NetResult minimum_net(const ClosenessMatrix& close, std::size_t node_budget) {
  NetResult result;
  if (close.empty()) {
    result.exact = true;
    return result;
  }
  std::vector<std::size_t> greedy = greedy_net(close);
  result.greedy_size = greedy.size();
  ExactSearch search(close, std::move(greedy), node_budget);
  search.run();
  result.net = search.best();
  result.exact = search.finished();
  return result;
}

bool is_net(const ClosenessMatrix& close, std::span<const std::size_t> net) {
  const std::size_t n = close.size();
  MemberSet covered(n);
  for (std::size_t i : net) {
    for (std::size_t j = 0; j < n; ++j) {
      if (close[i].test(j)) covered.set(j);
    }
  }
  return covered.count() == n;
}

}  // namespace wallman
