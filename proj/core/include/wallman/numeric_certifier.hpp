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

// Relative compactness of sampled real-valued families on the line.
//
// A family is a matrix of samples on a strictly increasing grid in [−L, L],
// optionally with declared limits at ±∞. The sampled sup metric is the
// maximum over grid samples and declared tail values, so tails stand in for
// everything beyond the grid.
//
// Search grids (all deterministic):
//   windows  D_j = [−T_j, T_j], T_j = window_fraction · L / 2^j for
//            j < window_levels, tried smallest first;
//   δ        ε / 2^j for j < delta_levels, tried largest first;
//   modulus  span / 2^j down to the largest grid spacing.
// Every closed comparison a ≤ b is evaluated as a ≤ b + slack·max(1, |b|).

#ifndef WALLMAN_NUMERIC_CERTIFIER_HPP_
#define WALLMAN_NUMERIC_CERTIFIER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wallman/aa_certifier.hpp"
#include "wallman/epsilon_net.hpp"

namespace wallman {

struct SampledFunction {
  std::vector<double> samples;
  std::optional<double> tail_pos;
  std::optional<double> tail_neg;
};

struct SampledFamily {
  std::vector<double> grid;
  std::vector<SampledFunction> functions;
  std::string label;

  /// Every member declares both tails.
  bool has_tails() const;
};

struct NumericConfig {
  /// Declared tails must match the outermost `tail_samples` samples.
  double tail_tolerance = 0.05;
  int tail_samples = 1;
  double window_fraction = 0.25;
  int window_levels = 8;
  int delta_levels = 5;
  double slack = 1e-9;
  double growth_slope_threshold = 0.5;
  /// Evaluate the modulus at this δ only, instead of the dyadic search.
  std::optional<double> modulus_delta;
};

/// Throws InvalidInput on a malformed family, InvalidConfig on bad settings.
void validate(const SampledFamily& family, const NumericConfig& config);

/// Sup over samples and declared tails.
double sampled_distance(const SampledFunction& f, const SampledFunction& g);

struct KP1Result {
  bool passed = false;
  double max_spread = 0;
  std::size_t argmax_index = 0;
};

struct ModulusPoint {
  double delta;
  double omega;
};

struct ModulusWitness {
  std::size_t function;
  std::size_t i;
  std::size_t j;
  double difference;
};

struct KP2Result {
  double eps = 0;
  bool passed = false;
  /// Largest δ of the search with ω(δ) ≤ ε.
  std::optional<double> delta;
  /// Descending δ.
  std::vector<ModulusPoint> modulus;
  /// Largest variation at the smallest δ, reported on failure.
  std::optional<ModulusWitness> witness;
};

struct PairWitness {
  std::size_t f;
  std::size_t g;
  double T;
  double delta;
  /// Window sup (KP3) or one-point gap at ±T (condition P).
  double local;
  /// Global sup (KP3) or tail sup (condition P).
  double global;
};

struct WindowWitness {
  double T;
  double delta;
};

struct KP3Result {
  double eps = 0;
  bool passed = false;
  std::optional<WindowWitness> witness;
  std::optional<PairWitness> violation;
};

struct ConditionPResult {
  double eps = 0;
  bool passed = false;
  std::optional<WindowWitness> witness;
  std::optional<PairWitness> violation;
  bool agrees_with_kp3 = false;
  /// A KP3 witness (T, δ) existed; a (P) witness with T′ ≥ T was sought.
  bool propagation_checked = false;
  bool propagation_holds = true;
};

struct GrowthPoint {
  std::size_t family_size;
  std::size_t net_size;
};

struct GrowthResult {
  double eps = 0;
  /// Stride-4, stride-2 and full subfamilies.
  std::vector<GrowthPoint> points;
  double slope = 0;
  /// The full family needs at most one more net member than stride 2.
  bool stable = false;
};

struct NumericScaleResult {
  double eps = 0;
  KP2Result kp2;
  std::optional<KP3Result> kp3;
  std::optional<ConditionPResult> p;
  NetResult net;
  GrowthResult growth;
};

struct NumericCertificate {
  std::string label;
  Verdict verdict = Verdict::kInconclusive;
  std::string reason;
  NumericConfig config;
  KP1Result kp1;
  bool tails_declared = false;
  std::vector<NumericScaleResult> scales;
};

/// Pairwise profiles over the window grid, computed once per family.
class NumericAnalysis {
 public:
  NumericAnalysis(const SampledFamily& family, NumericConfig config);

  const SampledFamily& family() const { return *family_; }
  const NumericConfig& config() const { return config_; }
  std::size_t size() const { return family_->functions.size(); }
  /// Window half-widths, smallest first.
  const std::vector<double>& windows() const { return windows_; }
  /// Modulus search values, largest first.
  const std::vector<double>& modulus_deltas() const { return modulus_deltas_; }
  std::vector<double> deltas(double eps) const;
  double distance(std::size_t f, std::size_t g) const;
  bool leq(double a, double b) const;

  KP1Result kp1() const;
  /// ω(δ): largest variation of any member over sample pairs at most δ apart.
  ModulusPoint modulus(double delta, ModulusWitness* witness = nullptr) const;
  KP2Result kp2(double eps) const;
  /// Throws NoTails unless every member declares both tails.
  KP3Result kp3(double eps) const;
  ConditionPResult condition_p(double eps) const;
  ClosenessMatrix closeness(double eps) const;
  GrowthResult growth(double eps, const ClosenessMatrix& close) const;

 private:
  struct PairProfile {
    double global = 0;
    // Per window j.
    std::vector<double> window_sup;
    std::vector<double> right_point;
    std::vector<double> right_tail;
    std::vector<double> left_point;
    std::vector<double> left_tail;
  };

  std::size_t pair_index(std::size_t f, std::size_t g) const;
  bool p_holds(std::size_t window, double delta, double eps) const;

  const SampledFamily* family_;
  NumericConfig config_;
  std::vector<double> windows_;
  std::vector<double> modulus_deltas_;
  // Sparse tables of argmax/argmin per function.
  std::vector<std::vector<std::vector<std::uint32_t>>> argmax_;
  std::vector<std::vector<std::vector<std::uint32_t>>> argmin_;
  std::vector<PairProfile> profiles_;
};

KP1Result check_KP1(const SampledFamily& family, const NumericConfig& config = {});
KP2Result check_KP2(const SampledFamily& family, double eps,
                    const NumericConfig& config = {});
KP3Result check_KP3(const SampledFamily& family, double eps,
                    const NumericConfig& config = {});
ConditionPResult check_condition_P(const SampledFamily& family, double eps,
                                   const NumericConfig& config = {});
NetResult epsilon_net_oracle(const SampledFamily& family, double eps,
                             const NumericConfig& config = {});

NumericCertificate certify_numeric(const SampledFamily& family,
                                   std::span<const double> eps_grid,
                                   const NumericConfig& config = {});

}  // namespace wallman

#endif  // WALLMAN_NUMERIC_CERTIFIER_HPP_
