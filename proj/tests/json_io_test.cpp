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

#include <gtest/gtest.h>

#include <vector>

#include "fixtures.hpp"
#include "wallman/error.hpp"
#include "wallman/json_io.hpp"
#include "wallman/random_models.hpp"

namespace wallman {
namespace {

using testing::q;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::kInvalidConfig;
}

TEST(Rational, ParsesDecimalForms) {
  EXPECT_EQ(parse_rational("3/4"), q(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), q(-3, 4));
  EXPECT_EQ(parse_rational("0.25"), q(1, 4));
  EXPECT_EQ(parse_rational("0.025"), q(1, 40));
  EXPECT_EQ(parse_rational("007"), q(7));
  EXPECT_EQ(parse_rational("08/010"), q(4, 5));
  EXPECT_EQ(parse_rational("-0.125"), q(-1, 8));
  EXPECT_EQ(parse_rational("3e-2"), q(3, 100));
  EXPECT_EQ(parse_rational("1.5E2"), q(150));
  EXPECT_EQ(parse_rational(" .5 "), q(1, 2));
  for (const char* bad : {"", "1/0", "abc", "1.2.3", "--1", "1e", ".", "1/2/3"}) {
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::kInvalidInput) << bad;
  }
}

TEST(Rational, DoublesReadBackAsShortestDecimal) {
  EXPECT_EQ(rational_from_double(0.1), q(1, 10));
  EXPECT_EQ(rational_from_double(-2.5), q(-5, 2));
  EXPECT_EQ(to_string(q(6, 4)), "3/2");
  EXPECT_EQ(to_string(q(-4, 2)), "-2");
  EXPECT_EQ(format_double(0.1), "0.1");
}

TEST(JsonText, MalformedInputIsInvalidInput) {
  EXPECT_EQ(code_of([] { parse_json_text("{\"space\": "); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/wallman.json"); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] { parse_lattice_spec(parse_json_text("{}")); }), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] {
              parse_lattice_spec(parse_json_text(
                  R"({"space": {"kind": "torus", "size": 3}, "generators": []})"));
            }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([] {
              parse_lattice_spec(parse_json_text(
                  R"({"space": {"kind": "nat", "period": 2}, "generators": [{"prefix": "", "periodic": "100"}]})"));
            }),
            ErrorCode::kGeneratorNotInSpace);
}

TEST(LatticeSpec, ParsesHandWrittenDocument) {
  const LatticeSpec spec = parse_lattice_spec(parse_json_text(R"({
    "space": {"kind": "nat", "period": 2, "prefix": 1},
    "generators": [{"prefix": "", "periodic": "10"}, {"prefix": "1", "periodic": "0"}],
    "mode": "strict"
  })"));
  EXPECT_EQ(spec.space, GroundSpace::natural(2, 1));
  ASSERT_EQ(spec.generators.size(), 2U);
  EXPECT_EQ(spec.generators[0], testing::evens(spec.space));
  EXPECT_EQ(spec.mode, StarMode::kStrict);
  EXPECT_FALSE(spec.opens.has_value());
}

// Randomized: every document the library writes reads back to the same value.
TEST(JsonRoundTrip, SpecsSpacesAndFamilies) {
  Rng rng(53, 13);
  const ModelSizes sizes;
  for (int round = 0; round < 100; ++round) {
    LatticeSpec spec = random_lattice_spec(rng, sizes);
    if (rng.coin()) spec.opens = std::vector<LatticeElement>{random_element(rng, spec.space), spec.space.full_set()};
    const Json doc = lattice_spec_json(spec);
    const LatticeSpec back = parse_lattice_spec(parse_json_text(dump_json(doc)));
    EXPECT_EQ(back.space, spec.space);
    EXPECT_EQ(back.generators, spec.generators);
    EXPECT_EQ(back.opens, spec.opens);
    EXPECT_EQ(back.mode, spec.mode);

    const WallmanSpace space = build_space(spec);
    const Json sdoc = space_json(spec, space);
    EXPECT_EQ(lattice_spec_json(parse_space_document(sdoc)), doc);

    const ExactFamily fam = random_family(rng, space, sizes);
    const ExactFamilyDocument fdoc = parse_exact_family(parse_json_text(dump_json(exact_family_json(spec, fam))));
    EXPECT_EQ(fdoc.family.functions, fam.functions);
    EXPECT_EQ(fdoc.family.label, fam.label);
  }
}

TEST(JsonRoundTrip, SpaceDocumentRejectsTampering) {
  const LatticeSpec spec = parse_lattice_spec(parse_json_text(
      R"({"space": {"kind": "finite", "size": 3}, "generators": [{"prefix": "100"}]})"));
  Json doc = space_json(spec, build_space(spec));
  doc["elements"].erase(doc["elements"].begin());
  EXPECT_EQ(code_of([&] { parse_space_document(doc); }), ErrorCode::kInvalidInput);
}

TEST(Functions, ValuesAcceptStringsAndNumbers) {
  const GroundSpace g = GroundSpace::natural(2, 2);
  const BoundedFunction f = parse_function(
      parse_json_text(R"({"kind": "nat", "values": ["1/3", 0.5], "asymptotics": {"0": "0.25", "1": -1}})"), g);
  EXPECT_EQ(f.at_point(0), q(1, 3));
  EXPECT_EQ(f.at_point(1), q(1, 2));
  EXPECT_EQ(f.at_point(10), q(1, 4));
  EXPECT_EQ(f.at_point(11), q(-1));
  EXPECT_EQ(parse_function(function_json(f), g), f);

  const Json list = parse_json_text(R"([{"kind": "finite", "values": [1, 2]}])");
  const GroundSpace g2 = GroundSpace::finite(2);
  EXPECT_EQ(parse_function_list(list, g2).size(), 1U);
  Json wrapped;
  wrapped["functions"] = list;
  EXPECT_EQ(parse_function_list(wrapped, g2).size(), 1U);

  EXPECT_EQ(code_of([&] { parse_function(parse_json_text(R"({"kind": "finite", "values": [1]})"), g); }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([&] {
              parse_function(parse_json_text(R"({"kind": "nat", "values": [], "asymptotics": {"x": 1}})"), g);
            }),
            ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of([&] { parse_value(parse_json_text("true"), "v"); }), ErrorCode::kInvalidInput);
}

TEST(SampledFamilies, RoundTripAndValidation) {
  SampledFamily fam;
  fam.label = "pair";
  fam.grid = {-1.0, 0.0, 1.0};
  fam.functions.push_back({{0.0, 0.1, 0.0}, 0.0, 0.0});
  fam.functions.push_back({{0.5, 0.25, 0.125}, std::nullopt, std::nullopt});
  const SampledFamily back = parse_sampled_family(parse_json_text(dump_json(sampled_family_json(fam))));
  EXPECT_EQ(back.grid, fam.grid);
  EXPECT_EQ(back.label, fam.label);
  ASSERT_EQ(back.functions.size(), 2U);
  EXPECT_EQ(back.functions[0].samples, fam.functions[0].samples);
  EXPECT_EQ(back.functions[0].tail_pos, 0.0);
  EXPECT_FALSE(back.functions[1].tail_neg.has_value());
  EXPECT_EQ(code_of([] { parse_sampled_family(parse_json_text(R"({"grid": [0, 1]})")); }),
            ErrorCode::kInvalidInput);
}

TEST(Certificates, SerializationIsDeterministic) {
  const WallmanSpace space = testing::parity_space(2);
  ExactFamily fam;
  fam.label = "det";
  for (int k = 0; k < 4; ++k) {
    fam.functions.push_back(testing::parity_function(space.space(), q(k, 3), q(1, k + 1)));
  }
  const std::vector<Rational> eps{q(1, 2), q(1, 8)};
  const std::string a = dump_json(certificate_json(certify_exact(fam, space, eps), space));
  const std::string b = dump_json(certificate_json(certify_exact(fam, space, eps), space));
  EXPECT_EQ(a, b);
  const Json doc = parse_json_text(a);
  EXPECT_EQ(doc["verdict"], "RelativelyCompact");
  EXPECT_EQ(doc["checks"]["scales"][0]["eps"], "1/2");
  EXPECT_EQ(doc["checks"]["scales"].size(), 2U);
}

}  // namespace
}  // namespace wallman
