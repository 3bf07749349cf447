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

#include "wallman/rational.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "wallman/error.hpp"

namespace wallman {
namespace {

using boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Decimal only; the cpp_int string constructor treats a leading 0 as octal.
cpp_int decimal(std::string_view digits) {
  cpp_int value = 0;
  for (char c : digits) value = value * 10 + (c - '0');
  return value;
}

cpp_int parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw Error(ErrorCode::kInvalidInput,
                "not a number: '" + std::string(whole) + "'");
  }
  cpp_int value = decimal(s);
  return negative ? cpp_int(-value) : value;
}

cpp_int pow10(long exponent) {
  cpp_int p = 1;
  for (long i = 0; i < exponent; ++i) p *= 10;
  return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorCode::kInvalidInput, "empty number");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    cpp_int num = parse_integer(s.substr(0, slash), text);
    cpp_int den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorCode::kInvalidInput,
                  "zero denominator: '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    cpp_int exp_value = parse_integer(exp_text, text);
    if (exp_value > 4096 || exp_value < -4096) {
      throw Error(ErrorCode::kInvalidInput,
                  "exponent out of range: '" + std::string(text) + "'");
    }
    exponent = exp_value.convert_to<long>();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw Error(ErrorCode::kInvalidInput,
                  "not a number: '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) {
      throw Error(ErrorCode::kInvalidInput,
                  "not a number: '" + std::string(text) + "'");
    }
    digits = std::string(s);
  }
  cpp_int mantissa = decimal(digits);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return Rational(mantissa * pow10(exponent));
  return Rational(mantissa, pow10(-exponent));
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) {
    throw Error(ErrorCode::kInvalidInput, "non-finite value");
  }
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return parse_rational(std::string_view(buf.data(), end - buf.data()));
}

std::string to_string(const Rational& value) {
  const cpp_int& num = boost::multiprecision::numerator(value);
  const cpp_int& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace wallman
