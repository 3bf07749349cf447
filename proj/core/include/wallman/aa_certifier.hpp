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

// Relative compactness of exact function families over a Wallman space.
//
// Two independent routes are evaluated side by side:
//
//   * pointwise boundedness (AA1) plus ω-equicontinuity (AA2): for every
//     ultrafilter 𝒰 some open V with 𝒰 ∈ V⋆ keeps every member within ε of
//     its 𝒰-limit on V;
//   * total boundedness in the sup metric, measured by a minimum ε-net.
//
// The cross-check ties them together quantitatively. AA1 ∧ AA2(ε/3) yields
// an ε-net built from ε/3-clusters of the limit values, so the minimum net is
// no larger than the number of occupied clusters. Conversely, if the members
// of an ε-net are themselves ω-equicontinuous at ε, the whole family is
// ω-equicontinuous at 3ε.

#ifndef WALLMAN_AA_CERTIFIER_HPP_
#define WALLMAN_AA_CERTIFIER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wallman/epsilon_net.hpp"
#include "wallman/rational.hpp"
#include "wallman/ultralimits.hpp"
#include "wallman/wallman_space.hpp"

namespace wallman {

struct ExactFamily {
  std::vector<BoundedFunction> functions;
  std::string label;
};

enum class Verdict { kRelativelyCompact, kNotRelativelyCompact, kInconclusive };

std::string_view to_string(Verdict verdict);

struct AA1Result {
  bool passed = false;
  Rational max_spread;
  int argmax_site = 0;
};

struct AA2Obstruction {
  std::size_t ultrafilter;
  /// Smallest achievable deviation over all admissible opens, and the first
  /// open attaining it (none when no open contains the ultrafilter).
  std::optional<Rational> best_deviation;
  std::optional<std::size_t> best_open;
};

struct AA2Result {
  Rational eps;
  bool passed = false;
  /// Open index per ultrafilter; empty entries were not checked or failed.
  std::vector<std::optional<std::size_t>> neighborhoods;
  std::optional<AA2Obstruction> obstruction;
};

struct DiscreteKP2Result {
  Rational eps;
  bool passed = false;
  /// Points checked: those lying in a finite atom.
  std::vector<int> sites;
  /// Open index per checked site.
  std::vector<std::optional<std::size_t>> neighborhoods;
  std::optional<int> failing_site;
};

/// Limits and deviations of a family, computed once and shared across scales.
class ExactAnalysis {
 public:
  ExactAnalysis(const ExactFamily& family, const WallmanSpace& space);

  const ExactFamily& family() const { return *family_; }
  const WallmanSpace& space() const { return *space_; }
  std::size_t size() const { return family_->functions.size(); }
  const Rational& limit(std::size_t function, std::size_t ultrafilter) const {
    return limits_[function][ultrafilter];
  }
  const Rational& distance(std::size_t f, std::size_t g) const {
    return distances_[f][g];
  }

  AA1Result aa1() const;
  /// AA2 at `eps` for the listed members (everyone when empty), optionally
  /// only at principal ultrafilters.
  AA2Result aa2(const Rational& eps, std::span<const std::size_t> members = {},
                bool principal_only = false) const;
  ClosenessMatrix closeness(const Rational& eps) const;

 private:
  const ExactFamily* family_;
  const WallmanSpace* space_;
  std::vector<std::vector<Rational>> limits_;
  // deviation_[f][k][s] = |f(s) − lim_k f|
  std::vector<std::vector<std::vector<Rational>>> deviation_;
  std::vector<std::vector<Rational>> distances_;
};

AA1Result check_AA1(const ExactFamily& family);

AA2Result check_AA2(const ExactFamily& family, const WallmanSpace& space,
                    const Rational& eps);

/// ∀t⋆ ∃V ∋ t⋆ ∀f, t ∈ V: |f(t) − f(t⋆)| < ε, over points lying in finite
/// atoms and opens from the space. Works from raw values, never from limits.
DiscreteKP2Result check_discrete_KP2(const ExactFamily& family,
                                     const WallmanSpace& space,
                                     const Rational& eps);

NetResult epsilon_net_oracle(const ExactFamily& family, const Rational& eps);

struct ForwardCheck {
  /// AA1 ∧ AA2(ε/3) held, so the implication was exercised.
  bool applicable = false;
  std::size_t cell_count = 0;
  /// ∏ over ultrafilters (and uncovered sites) of ε/3-cluster counts,
  /// saturated at SIZE_MAX.
  std::size_t cluster_product = 0;
  bool cells_form_net = false;
  bool holds = true;
};

struct BackwardCheck {
  /// The net's members are ω-equicontinuous at ε.
  bool applicable = false;
  bool holds = true;
};

struct ExactScaleResult {
  Rational eps;
  AA2Result aa2;
  AA2Result aa2_third;
  AA2Result aa2_triple;
  AA2Result net_aa2;
  NetResult net;
  ForwardCheck forward;
  BackwardCheck backward;
};

struct ExactCertificate {
  std::string label;
  Verdict verdict = Verdict::kInconclusive;
  AA1Result aa1;
  std::vector<ExactScaleResult> scales;

  bool cross_check_passed() const;
};

ExactCertificate certify_exact(const ExactFamily& family,
                               const WallmanSpace& space,
                               std::span<const Rational> eps_grid);

}  // namespace wallman

#endif  // WALLMAN_AA_CERTIFIER_HPP_
