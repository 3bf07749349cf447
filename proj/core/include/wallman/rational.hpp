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

#ifndef WALLMAN_RATIONAL_HPP_
#define WALLMAN_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wallman {

// Arbitrary precision rationals; the exact model never touches floating point.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers and plain decimals ("-0.125", "3e-2").
Rational parse_rational(std::string_view text);

// Shortest round-trip decimal of a double, read back exactly ("0.3" -> 3/10).
Rational rational_from_double(double value);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

inline Rational abs_value(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

}  // namespace wallman

#endif  // WALLMAN_RATIONAL_HPP_
