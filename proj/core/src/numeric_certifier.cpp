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

#include "wallman/numeric_certifier.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "wallman/error.hpp"

namespace wallman {
namespace {

std::string decimal(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void require_finite(double v, const std::string& what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidInput, what + " is not finite");
  }
}

void require_eps(double eps) {
  if (!(eps > 0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::kInvalidConfig, "epsilon must be positive and finite");
  }
}

std::size_t nearest_index(const std::vector<double>& grid, double x) {
  auto it = std::lower_bound(grid.begin(), grid.end(), x);
  if (it == grid.begin()) return 0;
  if (it == grid.end()) return grid.size() - 1;
  const auto hi = static_cast<std::size_t>(it - grid.begin());
  return (x - grid[hi - 1] <= grid[hi] - x) ? hi - 1 : hi;
}

double tail_gap(const std::optional<double>& a, const std::optional<double>& b) {
  return a && b ? std::abs(*a - *b) : 0.0;
}

// Least-squares slope of y against x; zero when x is constant.
double fit_slope(const std::vector<GrowthPoint>& points) {
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  for (const auto& p : points) {
    sx += static_cast<double>(p.family_size);
    sy += static_cast<double>(p.net_size);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& p : points) {
    const double dx = static_cast<double>(p.family_size) - mx;
    sxx += dx * dx;
    sxy += dx * (static_cast<double>(p.net_size) - my);
  }
  return sxx == 0 ? 0.0 : sxy / sxx;
}

}  // namespace

bool SampledFamily::has_tails() const {
  return std::all_of(functions.begin(), functions.end(),
                     [](const SampledFunction& f) { return f.tail_pos && f.tail_neg; });
}

void validate(const SampledFamily& family, const NumericConfig& config) {
  if (!(config.tail_tolerance >= 0) || config.tail_samples < 1 ||
      !(config.window_fraction > 0) || config.window_levels < 1 ||
      config.delta_levels < 1 || !(config.slack >= 0) ||
      !(config.growth_slope_threshold >= 0)) {
    throw Error(ErrorCode::kInvalidConfig, "numeric settings out of range");
  }
  const auto& grid = family.grid;
  if (grid.size() < 2) {
    throw Error(ErrorCode::kInvalidInput, "grid needs at least two points");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_finite(grid[i], "grid[" + std::to_string(i) + "]");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw Error(ErrorCode::kInvalidInput,
                  "grid is not strictly increasing at index " + std::to_string(i));
    }
  }
  if (family.functions.empty()) {
    throw Error(ErrorCode::kInvalidInput, "function family is empty");
  }
  const std::size_t k =
      std::min(grid.size(), static_cast<std::size_t>(config.tail_samples));
  for (std::size_t f = 0; f < family.functions.size(); ++f) {
    const auto& fn = family.functions[f];
    const std::string name = "functions[" + std::to_string(f) + "]";
    if (fn.samples.size() != grid.size()) {
      throw Error(ErrorCode::kInvalidInput,
                  name + ".samples has " + std::to_string(fn.samples.size()) +
                      " values for " + std::to_string(grid.size()) + " grid points");
    }
    for (std::size_t i = 0; i < fn.samples.size(); ++i) {
      require_finite(fn.samples[i], name + ".samples[" + std::to_string(i) + "]");
    }
    if (fn.tail_pos) {
      require_finite(*fn.tail_pos, name + ".tail_pos");
      for (std::size_t i = grid.size() - k; i < grid.size(); ++i) {
        if (std::abs(fn.samples[i] - *fn.tail_pos) > config.tail_tolerance) {
          throw Error(ErrorCode::kInvalidInput,
                      name + ".tail_pos disagrees with the last samples");
        }
      }
    }
    if (fn.tail_neg) {
      require_finite(*fn.tail_neg, name + ".tail_neg");
      for (std::size_t i = 0; i < k; ++i) {
        if (std::abs(fn.samples[i] - *fn.tail_neg) > config.tail_tolerance) {
          throw Error(ErrorCode::kInvalidInput,
                      name + ".tail_neg disagrees with the first samples");
        }
      }
    }
  }
}

double sampled_distance(const SampledFunction& f, const SampledFunction& g) {
  if (f.samples.size() != g.samples.size()) {
    throw Error(ErrorCode::kInvalidInput, "sample counts differ");
  }
  double best = std::max(tail_gap(f.tail_pos, g.tail_pos),
                         tail_gap(f.tail_neg, g.tail_neg));
  for (std::size_t i = 0; i < f.samples.size(); ++i) {
    best = std::max(best, std::abs(f.samples[i] - g.samples[i]));
  }
  return best;
}

NumericAnalysis::NumericAnalysis(const SampledFamily& family, NumericConfig config)
    : family_(&family), config_(std::move(config)) {
  validate(family, config_);
  const auto& grid = family.grid;
  const std::size_t n = grid.size();
  const double L = std::max(std::abs(grid.front()), std::abs(grid.back()));
  for (int j = config_.window_levels - 1; j >= 0; --j) {
    windows_.push_back(std::ldexp(config_.window_fraction * L, -j));
  }

  double max_gap = 0;
  for (std::size_t i = 1; i < n; ++i) max_gap = std::max(max_gap, grid[i] - grid[i - 1]);
  if (config_.modulus_delta) {
    const double d = *config_.modulus_delta;
    if (!(d > 0) || !std::isfinite(d)) {
      throw Error(ErrorCode::kInvalidConfig, "modulus delta must be positive");
    }
    if (!leq(max_gap, d)) {
      throw Error(ErrorCode::kGridTooCoarse,
                  "delta " + decimal(d) + " is below the grid spacing " +
                      decimal(max_gap));
    }
    modulus_deltas_.push_back(d);
  } else {
    for (double d = (grid.back() - grid.front()) / 2; leq(max_gap, d); d /= 2) {
      modulus_deltas_.push_back(d);
    }
    if (modulus_deltas_.empty() || modulus_deltas_.back() != max_gap) {
      modulus_deltas_.push_back(max_gap);
    }
  }

  // Sparse tables: level k covers [i, i + 2^k).
  const std::size_t m = family.functions.size();
  argmax_.resize(m);
  argmin_.resize(m);
  for (std::size_t f = 0; f < m; ++f) {
    const auto& v = family.functions[f].samples;
    auto& mx = argmax_[f];
    auto& mn = argmin_[f];
    mx.emplace_back(n);
    mn.emplace_back(n);
    for (std::size_t i = 0; i < n; ++i) {
      mx[0][i] = mn[0][i] = static_cast<std::uint32_t>(i);
    }
    for (std::size_t k = 1; (std::size_t{1} << k) <= n; ++k) {
      const std::size_t len = n - (std::size_t{1} << k) + 1;
      const std::size_t half = std::size_t{1} << (k - 1);
      mx.emplace_back(len);
      mn.emplace_back(len);
      for (std::size_t i = 0; i < len; ++i) {
        const auto a = mx[k - 1][i], b = mx[k - 1][i + half];
        mx[k][i] = v[b] > v[a] ? b : a;
        const auto c = mn[k - 1][i], d = mn[k - 1][i + half];
        mn[k][i] = v[d] < v[c] ? d : c;
      }
    }
  }

  // Window bounds and the grid points nearest ±T per window.
  const std::size_t w = windows_.size();
  std::vector<std::size_t> lo(w), hi(w), right(w), left(w);
  std::vector<bool> nonempty(w);
  for (std::size_t j = 0; j < w; ++j) {
    const double T = windows_[j];
    lo[j] = static_cast<std::size_t>(
        std::lower_bound(grid.begin(), grid.end(), -T - config_.slack) - grid.begin());
    hi[j] = static_cast<std::size_t>(
        std::upper_bound(grid.begin(), grid.end(), T + config_.slack) - grid.begin());
    nonempty[j] = lo[j] < hi[j];
    right[j] = nearest_index(grid, T);
    left[j] = nearest_index(grid, -T);
  }

  profiles_.resize(m * (m - 1) / 2);
  std::vector<double> diff(n), suffix(n), prefix(n);
  for (std::size_t f = 0; f < m; ++f) {
    for (std::size_t g = f + 1; g < m; ++g) {
      const auto& a = family.functions[f];
      const auto& b = family.functions[g];
      for (std::size_t i = 0; i < n; ++i) diff[i] = std::abs(a.samples[i] - b.samples[i]);
      const double pos = tail_gap(a.tail_pos, b.tail_pos);
      const double neg = tail_gap(a.tail_neg, b.tail_neg);
      suffix[n - 1] = std::max(diff[n - 1], pos);
      for (std::size_t i = n - 1; i-- > 0;) suffix[i] = std::max(suffix[i + 1], diff[i]);
      prefix[0] = std::max(diff[0], neg);
      for (std::size_t i = 1; i < n; ++i) prefix[i] = std::max(prefix[i - 1], diff[i]);

      PairProfile& p = profiles_[pair_index(f, g)];
      p.global = std::max(suffix[0], neg);
      for (std::size_t j = 0; j < w; ++j) {
        double sup = 0;
        if (nonempty[j]) {
          sup = *std::max_element(diff.begin() + static_cast<std::ptrdiff_t>(lo[j]),
                                  diff.begin() + static_cast<std::ptrdiff_t>(hi[j]));
        }
        p.window_sup.push_back(sup);
        p.right_point.push_back(diff[right[j]]);
        p.right_tail.push_back(suffix[right[j]]);
        p.left_point.push_back(diff[left[j]]);
        p.left_tail.push_back(prefix[left[j]]);
      }
    }
  }
}

std::size_t NumericAnalysis::pair_index(std::size_t f, std::size_t g) const {
  if (f > g) std::swap(f, g);
  const std::size_t m = size();
  return f * (2 * m - f - 1) / 2 + (g - f - 1);
}

bool NumericAnalysis::leq(double a, double b) const {
  return a <= b + config_.slack * std::max(1.0, std::abs(b));
}

std::vector<double> NumericAnalysis::deltas(double eps) const {
  std::vector<double> out;
  for (int j = 0; j < config_.delta_levels; ++j) out.push_back(std::ldexp(eps, -j));
  return out;
}

double NumericAnalysis::distance(std::size_t f, std::size_t g) const {
  return f == g ? 0.0 : profiles_[pair_index(f, g)].global;
}

KP1Result NumericAnalysis::kp1() const {
  KP1Result r;
  r.passed = true;
  r.max_spread = -1;
  const auto& fs = family_->functions;
  for (std::size_t i = 0; i < family_->grid.size(); ++i) {
    double lo = fs.front().samples[i], hi = lo;
    for (const auto& f : fs) {
      lo = std::min(lo, f.samples[i]);
      hi = std::max(hi, f.samples[i]);
    }
    if (hi - lo > r.max_spread) {
      r.max_spread = hi - lo;
      r.argmax_index = i;
    }
  }
  return r;
}

ModulusPoint NumericAnalysis::modulus(double delta, ModulusWitness* witness) const {
  const auto& grid = family_->grid;
  const std::size_t n = grid.size();
  double omega = 0;
  for (std::size_t f = 0; f < size(); ++f) {
    const auto& v = family_->functions[f].samples;
    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i) {
      r = std::max(r, i);
      while (r + 1 < n && leq(grid[r + 1] - grid[i], delta)) ++r;
      if (r == i) continue;
      const std::size_t len = r - i + 1;
      const auto k = static_cast<std::size_t>(std::bit_width(len) - 1);
      const std::size_t tail = r + 1 - (std::size_t{1} << k);
      const auto a = argmax_[f][k][i], b = argmax_[f][k][tail];
      const std::size_t imax = v[b] > v[a] ? b : a;
      const auto c = argmin_[f][k][i], d = argmin_[f][k][tail];
      const std::size_t imin = v[d] < v[c] ? d : c;
      const double spread = v[imax] - v[imin];
      if (spread > omega) {
        omega = spread;
        if (witness) {
          *witness = {f, std::min(imax, imin), std::max(imax, imin), spread};
        }
      }
    }
  }
  return {delta, omega};
}

KP2Result NumericAnalysis::kp2(double eps) const {
  require_eps(eps);
  KP2Result r;
  r.eps = eps;
  for (double d : modulus_deltas_) {
    const ModulusPoint point = modulus(d);
    r.modulus.push_back(point);
    if (!r.delta && leq(point.omega, eps)) r.delta = d;
  }
  r.passed = r.delta.has_value();
  if (!r.passed) {
    ModulusWitness w{};
    modulus(modulus_deltas_.back(), &w);
    r.witness = w;
  }
  return r;
}

KP3Result NumericAnalysis::kp3(double eps) const {
  require_eps(eps);
  if (!family_->has_tails()) {
    throw Error(ErrorCode::kNoTails, "extension check needs declared tails");
  }
  KP3Result r;
  r.eps = eps;
  const std::vector<double> ds = deltas(eps);
  for (std::size_t j = 0; j < windows_.size() && !r.passed; ++j) {
    for (double d : ds) {
      const bool ok = std::all_of(profiles_.begin(), profiles_.end(),
                                  [&](const PairProfile& p) {
                                    return !leq(p.window_sup[j], d) || leq(p.global, eps);
                                  });
      if (ok) {
        r.passed = true;
        r.witness = WindowWitness{windows_[j], d};
        break;
      }
    }
  }
  if (r.passed) return r;
  // Violating pair at the widest window and the smallest δ, closest on D.
  const std::size_t j = windows_.size() - 1;
  const double d = ds.back();
  for (std::size_t f = 0; f < size(); ++f) {
    for (std::size_t g = f + 1; g < size(); ++g) {
      const PairProfile& p = profiles_[pair_index(f, g)];
      if (!leq(p.window_sup[j], d) || leq(p.global, eps)) continue;
      if (!r.violation || p.window_sup[j] < r.violation->local) {
        r.violation = PairWitness{f, g, windows_[j], d, p.window_sup[j], p.global};
      }
    }
  }
  return r;
}

bool NumericAnalysis::p_holds(std::size_t j, double delta, double eps) const {
  return std::all_of(profiles_.begin(), profiles_.end(), [&](const PairProfile& p) {
    return (!leq(p.right_point[j], delta) || leq(p.right_tail[j], eps)) &&
           (!leq(p.left_point[j], delta) || leq(p.left_tail[j], eps));
  });
}

ConditionPResult NumericAnalysis::condition_p(double eps) const {
  const KP3Result k3 = kp3(eps);
  ConditionPResult r;
  r.eps = eps;
  const std::vector<double> ds = deltas(eps);
  for (std::size_t j = 0; j < windows_.size() && !r.passed; ++j) {
    for (double d : ds) {
      if (p_holds(j, d, eps)) {
        r.passed = true;
        r.witness = WindowWitness{windows_[j], d};
        break;
      }
    }
  }
  if (!r.passed) {
    const std::size_t j = windows_.size() - 1;
    const double d = ds.back();
    for (std::size_t f = 0; f < size(); ++f) {
      for (std::size_t g = f + 1; g < size(); ++g) {
        const PairProfile& p = profiles_[pair_index(f, g)];
        auto consider = [&](double point, double tail) {
          if (!leq(point, d) || leq(tail, eps)) return;
          if (!r.violation || point < r.violation->local) {
            r.violation = PairWitness{f, g, windows_[j], d, point, tail};
          }
        };
        consider(p.right_point[j], p.right_tail[j]);
        consider(p.left_point[j], p.left_tail[j]);
      }
    }
  }
  r.agrees_with_kp3 = r.passed == k3.passed;
  if (k3.witness) {
    r.propagation_checked = true;
    r.propagation_holds = false;
    for (std::size_t j = 0; j < windows_.size() && !r.propagation_holds; ++j) {
      if (windows_[j] < k3.witness->T) continue;
      for (double d : ds) {
        if (p_holds(j, d, eps)) {
          r.propagation_holds = true;
          break;
        }
      }
    }
  }
  return r;
}

ClosenessMatrix NumericAnalysis::closeness(double eps) const {
  require_eps(eps);
  return closeness_matrix(size(), [&](std::size_t f, std::size_t g) {
    return leq(distance(f, g), eps);
  });
}

GrowthResult NumericAnalysis::growth(double eps, const ClosenessMatrix& close) const {
  GrowthResult r;
  r.eps = eps;
  for (std::size_t stride : {4, 2, 1}) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < size(); i += stride) members.push_back(i);
    const NetResult net = minimum_net(restrict_matrix(close, members));
    r.points.push_back({members.size(), net.size()});
  }
  r.slope = fit_slope(r.points);
  r.stable = r.points[2].net_size <= r.points[1].net_size + 1;
  return r;
}

KP1Result check_KP1(const SampledFamily& family, const NumericConfig& config) {
  return NumericAnalysis(family, config).kp1();
}

KP2Result check_KP2(const SampledFamily& family, double eps,
                    const NumericConfig& config) {
  return NumericAnalysis(family, config).kp2(eps);
}

KP3Result check_KP3(const SampledFamily& family, double eps,
                    const NumericConfig& config) {
  return NumericAnalysis(family, config).kp3(eps);
}

ConditionPResult check_condition_P(const SampledFamily& family, double eps,
                                   const NumericConfig& config) {
  return NumericAnalysis(family, config).condition_p(eps);
}

NetResult epsilon_net_oracle(const SampledFamily& family, double eps,
                             const NumericConfig& config) {
  return minimum_net(NumericAnalysis(family, config).closeness(eps));
}

NumericCertificate certify_numeric(const SampledFamily& family,
                                   std::span<const double> eps_grid,
                                   const NumericConfig& config) {
  if (eps_grid.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "empty epsilon grid");
  }
  for (double eps : eps_grid) require_eps(eps);
  const NumericAnalysis analysis(family, config);

  NumericCertificate cert;
  cert.label = family.label;
  cert.config = config;
  cert.kp1 = analysis.kp1();
  cert.tails_declared = family.has_tails();

  std::string failure;
  std::string doubt;
  auto note = [](std::string& slot, const std::string& what) {
    if (slot.empty()) slot = what;
  };
  if (!cert.kp1.passed) note(failure, "pointwise bound fails");
  if (!cert.tails_declared) note(doubt, "no declared tails");

  for (double eps : eps_grid) {
    NumericScaleResult scale;
    scale.eps = eps;
    const std::string at = " at eps=" + decimal(eps);
    scale.kp2 = analysis.kp2(eps);
    if (!scale.kp2.passed) note(failure, "equicontinuity fails" + at);
    if (cert.tails_declared) {
      scale.kp3 = analysis.kp3(eps);
      scale.p = analysis.condition_p(eps);
      if (!scale.kp3->passed) note(failure, "extension property fails" + at);
    }
    const ClosenessMatrix close = analysis.closeness(eps);
    scale.net = minimum_net(close);
    scale.growth = analysis.growth(eps, close);
    if (scale.growth.slope > config.growth_slope_threshold) {
      note(failure, "net size grows with slope " + decimal(scale.growth.slope) + at);
    }
    if (!scale.growth.stable) note(doubt, "net size unstable under doubling" + at);
    cert.scales.push_back(std::move(scale));
  }

  if (!failure.empty()) {
    cert.verdict = Verdict::kNotRelativelyCompact;
    cert.reason = failure;
  } else if (!doubt.empty()) {
    cert.verdict = Verdict::kInconclusive;
    cert.reason = doubt;
  } else {
    cert.verdict = Verdict::kRelativelyCompact;
    cert.reason = "all checks pass and net size is stable";
  }
  return cert;
}

}  // namespace wallman
