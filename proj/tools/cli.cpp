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

#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <optional>
#include <set>
#include <sstream>

#include "wallman/aa_certifier.hpp"
#include "wallman/error.hpp"
#include "wallman/json_io.hpp"
#include "wallman/numeric_certifier.hpp"
#include "wallman/selftest.hpp"

namespace wallman::cli {
namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << dump_json(doc);
  } else {
    write_json_file(path, doc);
  }
}

const char* verdict_word(bool passed) { return passed ? "pass" : "FAIL"; }

struct BuildOptions {
  std::string lattice;
  std::string out;
};

int cmd_build(const BuildOptions& o, std::ostream& out) {
  const LatticeSpec spec = parse_lattice_spec(read_json_file(o.lattice));
  const WallmanSpace space = build_space(spec);
  write_json_file(o.out, space_json(spec, space));
  out << "built " << space.lattice().size() << " lattice elements, "
      << space.points().size() << " ultrafilters, " << space.opens().size()
      << " basic opens -> " << o.out << "\n";
  return kExitOk;
}

struct VerifyOptions {
  std::string space;
  std::string checks = "star,embedding,compact,hausdorff";
  std::string out;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const std::set<std::string> known = {"star", "embedding", "compact", "hausdorff"};
  const std::vector<std::string> checks = split_list(o.checks);
  if (checks.empty()) throw Error(ErrorCode::kInvalidConfig, "--checks: empty list");
  for (const auto& c : checks) {
    if (!known.count(c)) {
      throw Error(ErrorCode::kInvalidConfig, "--checks: unknown check '" + c + "'");
    }
  }
  const LatticeSpec spec = parse_space_document(read_json_file(o.space));
  const WallmanSpace space = build_space(spec);
  const GroundSpace& ground = space.space();

  Json results = Json::object();
  bool passed = true;
  for (const auto& c : checks) {
    if (results.contains(c)) continue;
    Json r;
    if (c == "star") {
      r = star_report_json(ground, verify_star_identities(space));
    } else if (c == "embedding") {
      r = embedding_report_json(ground, verify_principal_embedding(space));
    } else if (c == "compact") {
      r = compactness_report_json(check_compactness(space));
    } else {
      r = hausdorff_report_json(check_hausdorff(space));
    }
    const bool ok = r["passed"].get<bool>();
    passed = passed && ok;
    err << c << ": " << verdict_word(ok) << "\n";
    results[c] = std::move(r);
  }
  Json report = {{"space", lattice_spec_json(spec)},
                 {"mode", spec.mode == StarMode::kStrict ? "strict" : "lenient"},
                 {"checks", std::move(results)},
                 {"passed", passed}};
  emit(report, o.out, out);
  return passed ? kExitOk : kExitCheckFailed;
}

struct LimitsOptions {
  std::string space;
  std::string functions;
  std::string out;
};

int cmd_limits(const LimitsOptions& o, std::ostream& out) {
  const LatticeSpec spec = parse_space_document(read_json_file(o.space));
  const WallmanSpace space = build_space(spec);
  const std::vector<BoundedFunction> fs =
      parse_function_list(read_json_file(o.functions), space.space());
  if (fs.empty()) throw Error(ErrorCode::kInvalidInput, "functions: list is empty");

  const GammaTransform gamma = gamma_transform(fs, space);
  bool passed = true;
  Json functions = Json::array();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Json limits = Json::array();
    Json lemma = Json::array();
    bool lemma_ok = true;
    for (std::size_t k = 0; k < space.points().size(); ++k) {
      limits.push_back(to_string(gamma.tables[i].limits[k]));
      const Lemma4Report r =
          verify_lemma4(fs[i], space.points()[k], default_epsilon_grid(fs[i]));
      lemma.push_back(r.passed());
      lemma_ok = lemma_ok && r.passed();
    }
    passed = passed && lemma_ok;
    functions.push_back({{"index", i},
                         {"sup_norm", to_string(fs[i].sup_norm())},
                         {"limits", std::move(limits)},
                         {"near_set_property", std::move(lemma)},
                         {"near_set_property_passed", lemma_ok},
                         {"round_trip", gamma_inverse(gamma.tables[i], space) == fs[i]}});
  }
  Json pairs = Json::array();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      const ContinuityReport r = verify_gamma_continuity(fs[i], fs[j], space);
      passed = passed && r.forward_bound;
      pairs.push_back({{"f", i},
                       {"g", j},
                       {"ground_distance", to_string(r.ground_distance)},
                       {"extended_distance", to_string(r.extended_distance)},
                       {"ratio", r.ratio ? Json(to_string(*r.ratio)) : Json(nullptr)},
                       {"forward_bound", r.forward_bound},
                       {"inverse_bound", r.inverse_bound},
                       {"equal", r.equal}});
    }
  }
  Json collisions = Json::array();
  for (const auto& [a, b] : gamma.collisions) collisions.push_back({a, b});
  Json report = {{"ultrafilters", space.points().size()},
                 {"functions", std::move(functions)},
                 {"gamma", {{"injective", gamma.injective()}, {"collisions", std::move(collisions)}}},
                 {"pairs", std::move(pairs)},
                 {"passed", passed}};
  emit(report, o.out, out);
  return passed ? kExitOk : kExitCheckFailed;
}

struct CertifyOptions {
  std::string family;
  std::string mode = "exact";
  std::string eps = "0.25,0.125";
  std::string out;
  NumericConfig numeric;
  std::optional<double> modulus_delta;
};

double parse_double(const std::string& text, const std::string& field) {
  double v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw Error(ErrorCode::kInvalidConfig, field + ": not a number '" + text + "'");
  }
  return v;
}

int cmd_certify(const CertifyOptions& o, std::ostream& out, std::ostream& err) {
  const std::vector<std::string> eps_text = split_list(o.eps);
  if (eps_text.empty()) throw Error(ErrorCode::kInvalidConfig, "--eps: empty epsilon grid");
  const Json doc = read_json_file(o.family);
  Verdict verdict;
  Json cert;
  bool cross_check = true;
  if (o.mode == "exact") {
    std::vector<Rational> grid;
    for (const auto& e : eps_text) {
      try {
        grid.push_back(parse_rational(e));
      } catch (const Error&) {
        throw Error(ErrorCode::kInvalidConfig, "--eps: not a number '" + e + "'");
      }
      if (grid.back() <= 0) throw Error(ErrorCode::kInvalidConfig, "--eps: values must be positive");
    }
    const ExactFamilyDocument family = parse_exact_family(doc);
    const WallmanSpace space = build_space(family.lattice);
    const ExactCertificate c = certify_exact(family.family, space, grid);
    verdict = c.verdict;
    cross_check = c.cross_check_passed();
    cert = certificate_json(c, space);
  } else if (o.mode == "numeric") {
    std::vector<double> grid;
    for (const auto& e : eps_text) grid.push_back(parse_double(e, "--eps"));
    NumericConfig config = o.numeric;
    config.modulus_delta = o.modulus_delta;
    const SampledFamily family = parse_sampled_family(doc);
    const NumericCertificate c = certify_numeric(family, grid, config);
    verdict = c.verdict;
    cert = certificate_json(c);
  } else {
    throw Error(ErrorCode::kInvalidConfig, "--mode: expected exact or numeric");
  }
  emit(cert, o.out, out);
  err << "verdict: " << to_string(verdict) << "\n";
  if (!cross_check) err << "cross-check: FAIL\n";
  return verdict == Verdict::kRelativelyCompact && cross_check ? kExitOk : kExitCheckFailed;
}

struct SelftestOptions {
  SelftestConfig config;
  std::string out;
};

int cmd_selftest(const SelftestOptions& o, std::ostream& out, std::ostream& err) {
  const SelftestReport report = run_selftest(o.config);
  for (const auto& s : report.suites) {
    err << s.name << ": " << verdict_word(s.passed()) << " (" << s.cases << " cases, "
        << s.checks << " checks, " << s.failures << " failures)\n";
  }
  emit(selftest_json(report), o.out, out);
  return report.passed() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wallman compactification engine and relative-compactness certifier"};
  app.name("wallman");
  app.require_subcommand(1, 1);

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build the Wallman space of a lattice description");
  build_cmd->add_option("--lattice", build.lattice, "Lattice description JSON")->required();
  build_cmd->add_option("--out", build.out, "Space JSON to write")->required();

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Verify topological properties of a built space");
  verify_cmd->add_option("--space", verify.space, "Space JSON written by build")->required();
  verify_cmd->add_option("--checks", verify.checks,
                         "Comma-separated subset of star,embedding,compact,hausdorff")
      ->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "Report JSON (default: stdout)");

  LimitsOptions limits;
  auto* limits_cmd = app.add_subcommand("limits", "Ultrafilter limits, near-set and continuity checks");
  limits_cmd->add_option("--space", limits.space, "Space JSON written by build")->required();
  limits_cmd->add_option("--functions", limits.functions,
                         "Function list JSON: an array or {\"functions\": [...]}")
      ->required();
  limits_cmd->add_option("--out", limits.out, "Report JSON (default: stdout)");

  CertifyOptions certify;
  auto* certify_cmd = app.add_subcommand("certify", "Certify relative compactness of a family");
  certify_cmd->add_option("--family", certify.family, "Family JSON")->required();
  certify_cmd->add_option("--mode", certify.mode, "exact or numeric")->capture_default_str();
  certify_cmd->add_option("--eps", certify.eps, "Comma-separated epsilon grid")
      ->capture_default_str();
  certify_cmd->add_option("--out", certify.out, "Certificate JSON (default: stdout)");
  certify_cmd->add_option("--tail-tolerance", certify.numeric.tail_tolerance,
                          "Numeric: allowed gap between declared tails and outer samples")
      ->capture_default_str();
  certify_cmd->add_option("--tail-samples", certify.numeric.tail_samples,
                          "Numeric: outer samples checked against declared tails")
      ->capture_default_str();
  certify_cmd->add_option("--window-fraction", certify.numeric.window_fraction,
                          "Numeric: widest window half-width as a fraction of max|grid|")
      ->capture_default_str();
  certify_cmd->add_option("--window-levels", certify.numeric.window_levels,
                          "Numeric: number of dyadic windows")
      ->capture_default_str();
  certify_cmd->add_option("--delta-levels", certify.numeric.delta_levels,
                          "Numeric: number of dyadic delta values eps/2^j")
      ->capture_default_str();
  certify_cmd->add_option("--slack", certify.numeric.slack,
                          "Numeric: tolerance of closed comparisons")
      ->capture_default_str();
  certify_cmd->add_option("--growth-threshold", certify.numeric.growth_slope_threshold,
                          "Numeric: net-size slope per added function that counts as growth")
      ->capture_default_str();
  certify_cmd->add_option("--modulus-delta", certify.modulus_delta,
                          "Numeric: evaluate the modulus at this delta only (default: dyadic search)");

  SelftestOptions selftest;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the randomized invariant suites");
  selftest_cmd->add_option("--seed", selftest.config.seed, "Random seed")->capture_default_str();
  selftest_cmd->add_option("--out", selftest.out, "Report JSON (default: stdout)");
  selftest_cmd->add_option("--min-sites", selftest.config.sizes.min_sites,
                           "Smallest ground-space site count")
      ->capture_default_str();
  selftest_cmd->add_option("--max-sites", selftest.config.sizes.max_sites,
                           "Largest ground-space site count")
      ->capture_default_str();
  selftest_cmd->add_option("--min-generators", selftest.config.sizes.min_generators,
                           "Fewest lattice generators")
      ->capture_default_str();
  selftest_cmd->add_option("--max-generators", selftest.config.sizes.max_generators,
                           "Most lattice generators")
      ->capture_default_str();
  selftest_cmd->add_option("--max-functions", selftest.config.sizes.max_functions,
                           "Largest random family")
      ->capture_default_str();
  selftest_cmd->add_option("--lattices", selftest.config.lattices, "Random lattices per suite")
      ->capture_default_str();
  selftest_cmd->add_option("--families", selftest.config.families, "Random exact families")
      ->capture_default_str();
  selftest_cmd->add_option("--pairs", selftest.config.function_pairs,
                           "Random function pairs for the continuity suite")
      ->capture_default_str();
  selftest_cmd->add_option("--numeric-cases", selftest.config.numeric_cases,
                           "Random sampled families")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*build_cmd) return cmd_build(build, out);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*limits_cmd) return cmd_limits(limits, out);
    if (*certify_cmd) return cmd_certify(certify, out, err);
    return cmd_selftest(selftest, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace wallman::cli
