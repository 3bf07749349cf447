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

#include "wallman/json_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "wallman/error.hpp"
#include "wallman/filters.hpp"

namespace wallman {
namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kInvalidInput, field + ": " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path + "." + key, "missing field");
  return *it;
}

const Json* optional_member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

int integer_field(const Json& obj, const char* key, const std::string& path) {
  const Json& v = member(obj, key, path);
  if (!v.is_number_integer()) bad(path + "." + key, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || x > 1'000'000) bad(path + "." + key, "out of range");
  return static_cast<int>(x);
}

std::string string_field(const Json& obj, const char* key, const std::string& path,
                         std::optional<std::string> fallback = std::nullopt) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (fallback) return *fallback;
    bad(path + "." + key, "missing field");
  }
  if (!it->is_string()) bad(path + "." + key, "expected a string");
  return it->get<std::string>();
}

const Json& array_field(const Json& obj, const char* key, const std::string& path) {
  const Json& v = member(obj, key, path);
  if (!v.is_array()) bad(path + "." + key, "expected an array");
  return v;
}

std::string indexed(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

LatticeElement parse_pattern(const GroundSpace& space, const Json& doc,
                             const std::string& path) {
  if (!doc.is_object()) bad(path, "expected {\"prefix\", \"periodic\"}");
  const std::string prefix = string_field(doc, "prefix", path, "");
  const std::string periodic = string_field(doc, "periodic", path, "");
  try {
    return space.parse(prefix, periodic);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

double parse_real(const Json& v, const std::string& path) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    double out = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec == std::errc() && end == s.data() + s.size()) return out;
  }
  bad(path, "expected a number");
}

std::optional<double> parse_optional_real(const Json& obj, const char* key,
                                          const std::string& path) {
  const Json* v = optional_member(obj, key);
  if (!v) return std::nullopt;
  return parse_real(*v, path + "." + key);
}

Json rational_json(const Rational& r) { return to_string(r); }

Json optional_index(const std::optional<std::size_t>& i) {
  return i ? Json(*i) : Json(nullptr);
}

Json net_json(const NetResult& net) {
  return {{"net_size", net.size()},
          {"net", net.net},
          {"greedy_size", net.greedy_size},
          {"exact", net.exact}};
}

Json aa2_json(const AA2Result& r) {
  Json j = {{"eps", rational_json(r.eps)}, {"passed", r.passed}};
  Json hoods = Json::array();
  for (const auto& n : r.neighborhoods) hoods.push_back(optional_index(n));
  j["neighborhoods"] = std::move(hoods);
  if (r.obstruction) {
    const auto& o = *r.obstruction;
    j["obstruction"] = {
        {"ultrafilter", o.ultrafilter},
        {"best_deviation",
         o.best_deviation ? rational_json(*o.best_deviation) : Json(nullptr)},
        {"best_open", optional_index(o.best_open)}};
  } else {
    j["obstruction"] = nullptr;
  }
  return j;
}

Json pair_witness_json(const std::optional<PairWitness>& w) {
  if (!w) return nullptr;
  return {{"f", w->f},
          {"g", w->g},
          {"T", format_double(w->T)},
          {"delta", format_double(w->delta)},
          {"local", format_double(w->local)},
          {"global", format_double(w->global)}};
}

Json window_witness_json(const std::optional<WindowWitness>& w) {
  if (!w) return nullptr;
  return {{"T", format_double(w->T)}, {"delta", format_double(w->delta)}};
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInvalidInput, "cannot read " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidInput, path.string() + ": " + e.what());
  }
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kInvalidInput, "cannot write " + path.string());
  }
  out << dump_json(doc);
}

Json ground_space_json(const GroundSpace& space) {
  if (space.is_finite()) return {{"kind", "finite"}, {"size", space.size()}};
  return {{"kind", "nat"},
          {"period", space.period()},
          {"prefix", space.prefix_length()}};
}

Json element_json(const GroundSpace& space, const LatticeElement& e) {
  const BitPattern p = space.describe(e);
  return {{"prefix", p.prefix}, {"periodic", p.periodic}};
}

LatticeSpec parse_lattice_spec(const Json& doc) {
  const std::string path = "lattice";
  const Json& s = member(doc, "space", path);
  const std::string kind = string_field(s, "kind", path + ".space");
  LatticeSpec spec;
  try {
    if (kind == "finite") {
      spec.space = GroundSpace::finite(integer_field(s, "size", path + ".space"));
    } else if (kind == "nat") {
      const int period = integer_field(s, "period", path + ".space");
      const int prefix = s.contains("prefix")
                             ? integer_field(s, "prefix", path + ".space")
                             : 0;
      spec.space = GroundSpace::natural(period, prefix);
    } else {
      bad(path + ".space.kind", "expected \"finite\" or \"nat\"");
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidInput) throw;
    throw Error(e.code(), path + ".space: " + e.what());
  }
  const Json& gens = array_field(doc, "generators", path);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    spec.generators.push_back(
        parse_pattern(spec.space, gens[i], indexed(path + ".generators", i)));
  }
  if (const Json* opens = optional_member(doc, "opens")) {
    if (!opens->is_array()) bad(path + ".opens", "expected an array");
    spec.opens.emplace();
    for (std::size_t i = 0; i < opens->size(); ++i) {
      spec.opens->push_back(
          parse_pattern(spec.space, (*opens)[i], indexed(path + ".opens", i)));
    }
  }
  const std::string mode = string_field(doc, "mode", path, "lenient");
  if (mode == "lenient") {
    spec.mode = StarMode::kLenient;
  } else if (mode == "strict") {
    spec.mode = StarMode::kStrict;
  } else {
    bad(path + ".mode", "expected \"lenient\" or \"strict\"");
  }
  return spec;
}

Json lattice_spec_json(const LatticeSpec& spec) {
  Json j = {{"space", ground_space_json(spec.space)}};
  Json gens = Json::array();
  for (const auto& g : spec.generators) gens.push_back(element_json(spec.space, g));
  j["generators"] = std::move(gens);
  if (spec.opens) {
    Json opens = Json::array();
    for (const auto& o : *spec.opens) opens.push_back(element_json(spec.space, o));
    j["opens"] = std::move(opens);
  }
  j["mode"] = spec.mode == StarMode::kStrict ? "strict" : "lenient";
  return j;
}

ZeroSetLattice build_lattice(const LatticeSpec& spec) {
  return generate_lattice(spec.space, spec.generators);
}

WallmanSpace build_space(const LatticeSpec& spec) {
  return WallmanSpace::build(build_lattice(spec), spec.opens, spec.mode);
}

Json ultrafilter_json(const GroundSpace& space, const Ultrafilter& u) {
  return {{"core", element_json(space, u.core)},
          {"members", u.members},
          {"principal", u.principal},
          {"witness", u.witness ? Json(*u.witness) : Json(nullptr)},
          {"separating", u.separating}};
}

Json space_json(const LatticeSpec& spec, const WallmanSpace& space) {
  const GroundSpace& ground = space.space();
  Json j = {{"lattice", lattice_spec_json(spec)}};
  Json elements = Json::array();
  for (const auto& e : space.lattice().elements()) {
    elements.push_back(element_json(ground, e));
  }
  j["elements"] = std::move(elements);
  Json atom_list = Json::array();
  for (const auto& a : atoms(space.lattice())) atom_list.push_back(element_json(ground, a));
  j["atoms"] = std::move(atom_list);
  Json points = Json::array();
  for (const auto& u : space.points()) points.push_back(ultrafilter_json(ground, u));
  j["ultrafilters"] = std::move(points);
  Json opens = Json::array();
  Json stars = Json::array();
  for (std::size_t o = 0; o < space.opens().size(); ++o) {
    opens.push_back(element_json(ground, space.opens()[o]));
    Json members = Json::array();
    for (std::size_t k = 0; k < space.points().size(); ++k) {
      if (space.base_set(o).test(k)) members.push_back(k);
    }
    stars.push_back(std::move(members));
  }
  j["opens"] = std::move(opens);
  j["stars"] = std::move(stars);
  Json principal = Json::array();
  for (int s = 0; s < ground.site_count(); ++s) {
    principal.push_back({{"site", ground.site_label(s)},
                         {"ultrafilter", space.principal_of_site(s)},
                         {"maximal_trace", space.trace_is_maximal(s)}});
  }
  j["principal_map"] = std::move(principal);
  return j;
}

LatticeSpec parse_space_document(const Json& doc) {
  LatticeSpec spec = parse_lattice_spec(member(doc, "lattice", "space"));
  if (const Json* elements = optional_member(doc, "elements")) {
    const ZeroSetLattice lattice = build_lattice(spec);
    Json rebuilt = Json::array();
    for (const auto& e : lattice.elements()) rebuilt.push_back(element_json(spec.space, e));
    if (rebuilt != *elements) {
      bad("space.elements", "does not match the lattice description");
    }
  }
  return spec;
}

Rational parse_value(const Json& value, const std::string& field) {
  try {
    if (value.is_string()) return parse_rational(value.get_ref<const std::string&>());
    if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
    if (value.is_number_unsigned()) return Rational(value.get<std::uint64_t>());
    if (value.is_number_float()) return rational_from_double(value.get<double>());
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidInput, field + ": " + e.what());
  }
  bad(field, "expected a number or a numeric string");
}

BoundedFunction parse_function(const Json& doc, const GroundSpace& space,
                               const std::string& field) {
  const std::string kind = string_field(doc, "kind", field);
  const Json& values = array_field(doc, "values", field);
  std::vector<Rational> parsed;
  for (std::size_t i = 0; i < values.size(); ++i) {
    parsed.push_back(parse_value(values[i], indexed(field + ".values", i)));
  }
  try {
    if (kind == "finite") {
      if (!space.is_finite()) bad(field + ".kind", "the ground space is ℕ");
      return BoundedFunction::finite(space, std::move(parsed));
    }
    if (kind != "nat") bad(field + ".kind", "expected \"finite\" or \"nat\"");
    if (space.is_finite()) bad(field + ".kind", "the ground space is finite");
    std::map<int, Rational> asymptotics;
    const Json& asym = member(doc, "asymptotics", field);
    if (!asym.is_object()) bad(field + ".asymptotics", "expected an object");
    for (const auto& [key, value] : asym.items()) {
      int residue = -1;
      auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), residue);
      if (ec != std::errc() || end != key.data() + key.size()) {
        bad(field + ".asymptotics", "residue key '" + key + "' is not an integer");
      }
      asymptotics[residue] = parse_value(value, field + ".asymptotics." + key);
    }
    return BoundedFunction::natural(space, std::move(parsed), asymptotics);
  } catch (const Error& e) {
    if (std::string_view(e.what()).find(field) != std::string_view::npos) throw;
    throw Error(e.code(), field + ": " + e.what());
  }
}

Json function_json(const BoundedFunction& f) {
  const GroundSpace& space = f.space();
  Json values = Json::array();
  for (int t = 0; t < space.prefix_length(); ++t) values.push_back(rational_json(f.at_site(t)));
  if (space.is_finite()) return {{"kind", "finite"}, {"values", std::move(values)}};
  Json asym = Json::object();
  for (int r = 0; r < space.period(); ++r) {
    asym[std::to_string(r)] = rational_json(f.at_site(space.prefix_length() + r));
  }
  return {{"kind", "nat"}, {"values", std::move(values)}, {"asymptotics", std::move(asym)}};
}

std::vector<BoundedFunction> parse_function_list(const Json& doc,
                                                 const GroundSpace& space) {
  const Json& list = doc.is_array() ? doc : array_field(doc, "functions", "document");
  std::vector<BoundedFunction> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(parse_function(list[i], space, indexed("functions", i)));
  }
  return out;
}

ExactFamilyDocument parse_exact_family(const Json& doc) {
  ExactFamilyDocument out;
  out.lattice = parse_lattice_spec(member(doc, "lattice", "family"));
  out.family.functions = parse_function_list(doc, out.lattice.space);
  if (out.family.functions.empty()) bad("functions", "family is empty");
  out.family.label = string_field(doc, "label", "family", "");
  return out;
}

Json exact_family_json(const LatticeSpec& lattice, const ExactFamily& family) {
  Json functions = Json::array();
  for (const auto& f : family.functions) functions.push_back(function_json(f));
  return {{"lattice", lattice_spec_json(lattice)},
          {"functions", std::move(functions)},
          {"label", family.label}};
}

SampledFamily parse_sampled_family(const Json& doc) {
  SampledFamily family;
  const Json& grid = array_field(doc, "grid", "family");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    family.grid.push_back(parse_real(grid[i], indexed("grid", i)));
  }
  const Json& functions = array_field(doc, "functions", "family");
  for (std::size_t f = 0; f < functions.size(); ++f) {
    const std::string path = indexed("functions", f);
    SampledFunction fn;
    const Json& samples = array_field(functions[f], "samples", path);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      fn.samples.push_back(parse_real(samples[i], indexed(path + ".samples", i)));
    }
    fn.tail_pos = parse_optional_real(functions[f], "tail_pos", path);
    fn.tail_neg = parse_optional_real(functions[f], "tail_neg", path);
    family.functions.push_back(std::move(fn));
  }
  family.label = string_field(doc, "label", "family", "");
  return family;
}

Json sampled_family_json(const SampledFamily& family) {
  auto reals = [](const std::vector<double>& xs) {
    Json a = Json::array();
    for (double x : xs) a.push_back(format_double(x));
    return a;
  };
  auto tail = [](const std::optional<double>& t) {
    return t ? Json(format_double(*t)) : Json(nullptr);
  };
  Json functions = Json::array();
  for (const auto& f : family.functions) {
    functions.push_back({{"samples", reals(f.samples)},
                         {"tail_pos", tail(f.tail_pos)},
                         {"tail_neg", tail(f.tail_neg)}});
  }
  return {{"grid", reals(family.grid)},
          {"functions", std::move(functions)},
          {"label", family.label}};
}

Json star_report_json(const GroundSpace& space, const StarIdentityReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    const char* kind = v.kind == StarViolation::Kind::kMeet   ? "meet"
                       : v.kind == StarViolation::Kind::kJoin ? "join"
                                                              : "monotone";
    violations.push_back({{"kind", kind},
                          {"u", element_json(space, v.u)},
                          {"v", element_json(space, v.v)}});
  }
  return {{"passed", r.passed()},
          {"pairs_checked", r.pairs_checked},
          {"violation_count", r.violation_count},
          {"violations", std::move(violations)}};
}

Json embedding_report_json(const GroundSpace& space, const EmbeddingReport& r) {
  Json eq1 = Json::array();
  for (const auto& [site, open] : r.eq1_violations) {
    eq1.push_back({{"site", space.site_label(site)}, {"open", element_json(space, open)}});
  }
  Json non_maximal = Json::array();
  for (int s : r.non_maximal_sites) non_maximal.push_back(space.site_label(s));
  return {{"passed", r.passed()},
          {"principal_membership", r.eq1_holds},
          {"pairs_checked", r.pairs_checked},
          {"membership_violations", std::move(eq1)},
          {"dense", r.dense},
          {"density_violations", r.density_violations},
          {"total", r.total},
          {"non_maximal_sites", std::move(non_maximal)},
          {"injective", r.injective}};
}

Json compactness_report_json(const CompactnessReport& r) {
  return {{"passed", r.passed()}, {"covers", r.covers}, {"subcover", r.subcover}};
}

Json hausdorff_report_json(const HausdorffReport& r) {
  Json separations = Json::array();
  for (const auto& s : r.separations) {
    separations.push_back({s.first, s.second, s.u_open, s.v_open});
  }
  Json failures = Json::array();
  for (const auto& [a, b] : r.failures) failures.push_back({a, b});
  return {{"passed", r.passed()},
          {"separations", std::move(separations)},
          {"failures", std::move(failures)},
          {"separable_atom_pairs", r.lemma1_separable},
          {"consistent_with_separation_check", r.lemma1_consistent}};
}

Json certificate_json(const ExactCertificate& cert, const WallmanSpace& space) {
  const GroundSpace& ground = space.space();
  Json opens = Json::array();
  for (const auto& o : space.opens()) opens.push_back(element_json(ground, o));
  Json scales = Json::array();
  for (const auto& s : cert.scales) {
    scales.push_back(
        {{"eps", rational_json(s.eps)},
         {"AA2", aa2_json(s.aa2)},
         {"oracle", net_json(s.net)},
         {"cross_check",
          {{"forward",
            {{"applicable", s.forward.applicable},
             {"AA2_at_eps_over_3", s.aa2_third.passed},
             {"cell_count", s.forward.cell_count},
             {"cluster_product", s.forward.cluster_product},
             {"cells_form_net", s.forward.cells_form_net},
             {"holds", s.forward.holds}}},
           {"backward",
            {{"applicable", s.backward.applicable},
             {"net_AA2_at_eps", s.net_aa2.passed},
             {"AA2_at_3eps", s.aa2_triple.passed},
             {"holds", s.backward.holds}}}}}});
  }
  return {{"label", cert.label},
          {"mode", "exact"},
          {"verdict", std::string(to_string(cert.verdict))},
          {"checks",
           {{"AA1",
             {{"passed", cert.aa1.passed},
              {"max_spread", rational_json(cert.aa1.max_spread)},
              {"argmax_site", ground.site_label(cert.aa1.argmax_site)}}},
            {"scales", std::move(scales)}}},
          {"opens", std::move(opens)},
          {"cross_check_passed", cert.cross_check_passed()},
          {"tolerances", {{"comparison", "exact"}, {"aa2", "strict"}, {"net", "closed"}}}};
}

Json certificate_json(const NumericCertificate& cert) {
  const NumericConfig& c = cert.config;
  Json scales = Json::array();
  for (const auto& s : cert.scales) {
    Json modulus = Json::array();
    for (const auto& m : s.kp2.modulus) {
      modulus.push_back({{"delta", format_double(m.delta)}, {"omega", format_double(m.omega)}});
    }
    Json kp2 = {{"passed", s.kp2.passed},
                {"delta", s.kp2.delta ? Json(format_double(*s.kp2.delta)) : Json(nullptr)},
                {"modulus", std::move(modulus)}};
    if (s.kp2.witness) {
      const auto& w = *s.kp2.witness;
      kp2["witness"] = {{"function", w.function},
                        {"i", w.i},
                        {"j", w.j},
                        {"difference", format_double(w.difference)}};
    } else {
      kp2["witness"] = nullptr;
    }
    Json kp3 = nullptr;
    if (s.kp3) {
      kp3 = {{"passed", s.kp3->passed},
             {"witness", window_witness_json(s.kp3->witness)},
             {"violation", pair_witness_json(s.kp3->violation)}};
    }
    Json p = nullptr;
    if (s.p) {
      p = {{"passed", s.p->passed},
           {"witness", window_witness_json(s.p->witness)},
           {"violation", pair_witness_json(s.p->violation)},
           {"agrees_with_KP3", s.p->agrees_with_kp3},
           {"propagation_checked", s.p->propagation_checked},
           {"propagation_holds", s.p->propagation_holds}};
    }
    Json growth = Json::array();
    for (const auto& g : s.growth.points) {
      growth.push_back({{"family_size", g.family_size}, {"net_size", g.net_size}});
    }
    scales.push_back({{"eps", format_double(s.eps)},
                      {"KP2", std::move(kp2)},
                      {"KP3", std::move(kp3)},
                      {"P", std::move(p)},
                      {"oracle", net_json(s.net)},
                      {"growth",
                       {{"points", std::move(growth)},
                        {"slope", format_double(s.growth.slope)},
                        {"stable", s.growth.stable}}}});
  }
  return {{"label", cert.label},
          {"mode", "numeric"},
          {"verdict", std::string(to_string(cert.verdict))},
          {"reason", cert.reason},
          {"checks",
           {{"KP1",
             {{"passed", cert.kp1.passed},
              {"max_spread", format_double(cert.kp1.max_spread)},
              {"argmax_index", cert.kp1.argmax_index}}},
            {"tails_declared", cert.tails_declared},
            {"scales", std::move(scales)}}},
          {"tolerances",
           {{"tail_tolerance", format_double(c.tail_tolerance)},
            {"tail_samples", c.tail_samples},
            {"window_fraction", format_double(c.window_fraction)},
            {"window_levels", c.window_levels},
            {"delta_levels", c.delta_levels},
            {"slack", format_double(c.slack)},
            {"growth_slope_threshold", format_double(c.growth_slope_threshold)}}},
          {"model", "sampled grid on [-L, L]; declared tails stand in for the line beyond it"}};
}

}  // namespace wallman
