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

// JSON documents read and written by the command-line tool.
//
// Output objects keep insertion order and every numeric value is a decimal
// string (rationals as "p/q"), so equal inputs produce byte-identical files
// independent of locale. Parse errors raise InvalidInput naming the field.

#ifndef WALLMAN_JSON_IO_HPP_
#define WALLMAN_JSON_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wallman/aa_certifier.hpp"
#include "wallman/ground_lattice.hpp"
#include "wallman/numeric_certifier.hpp"
#include "wallman/ultralimits.hpp"
#include "wallman/wallman_space.hpp"

namespace wallman {

using Json = nlohmann::ordered_json;

/// Shortest round-trip decimal form.
std::string format_double(double value);

Json parse_json_text(std::string_view text);
Json read_json_file(const std::filesystem::path& path);
/// Two-space indentation, trailing newline.
std::string dump_json(const Json& doc);
void write_json_file(const std::filesystem::path& path, const Json& doc);

/// A lattice description: ground space, generators, optional opens.
struct LatticeSpec {
  GroundSpace space = GroundSpace::finite(1);
  std::vector<LatticeElement> generators;
  std::optional<std::vector<LatticeElement>> opens;
  StarMode mode = StarMode::kLenient;
};

LatticeSpec parse_lattice_spec(const Json& doc);
Json lattice_spec_json(const LatticeSpec& spec);
ZeroSetLattice build_lattice(const LatticeSpec& spec);
WallmanSpace build_space(const LatticeSpec& spec);

Json ground_space_json(const GroundSpace& space);
Json element_json(const GroundSpace& space, const LatticeElement& e);
Json ultrafilter_json(const GroundSpace& space, const Ultrafilter& u);

/// The built space: its description plus elements, atoms, ultrafilters,
/// opens and their ⋆-images.
Json space_json(const LatticeSpec& spec, const WallmanSpace& space);
/// Reads the description back out of a space document.
LatticeSpec parse_space_document(const Json& doc);

/// A number given as "p/q", a decimal string, or a JSON number.
Rational parse_value(const Json& value, const std::string& field);

BoundedFunction parse_function(const Json& doc, const GroundSpace& space,
                               const std::string& field = "function");
Json function_json(const BoundedFunction& f);
std::vector<BoundedFunction> parse_function_list(const Json& doc,
                                                 const GroundSpace& space);

struct ExactFamilyDocument {
  LatticeSpec lattice;
  ExactFamily family;
};

ExactFamilyDocument parse_exact_family(const Json& doc);
Json exact_family_json(const LatticeSpec& lattice, const ExactFamily& family);

SampledFamily parse_sampled_family(const Json& doc);
Json sampled_family_json(const SampledFamily& family);

Json star_report_json(const GroundSpace& space, const StarIdentityReport& r);
Json embedding_report_json(const GroundSpace& space, const EmbeddingReport& r);
Json compactness_report_json(const CompactnessReport& r);
Json hausdorff_report_json(const HausdorffReport& r);

Json certificate_json(const ExactCertificate& cert, const WallmanSpace& space);
Json certificate_json(const NumericCertificate& cert);

}  // namespace wallman

#endif  // WALLMAN_JSON_IO_HPP_
