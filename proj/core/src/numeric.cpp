// Copyright 2026 The minitwistor Authors
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

#include "mtf/numeric.hpp"

#include <cctype>
#include <limits>

#include "mtf/error.hpp"

namespace mtf {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational reduced(value);
  reduced.canonicalize();
  if (reduced.get_den() == 1) return reduced.get_num().get_str();
  return reduced.get_num().get_str() + "/" + reduced.get_den().get_str();
}

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_decimal_integer(text)) {
    throw InvalidInput("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw InvalidInput("denominator must be unsigned: '" + std::string(text) + "'");
  }
  const Integer den = parse_integer(den_text);
  if (den == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
  Rational result(num, den);
  result.canonicalize();
  return result;
}

std::size_t to_size(const Integer& value) {
  if (value < 0 || !value.fits_ulong_p() ||
      value.get_ui() > std::numeric_limits<std::size_t>::max()) {
    throw InvariantViolation("integer out of size_t range: " + value.get_str());
  }
  return static_cast<std::size_t>(value.get_ui());
}

const Rational& ExtendedRational::value() const {
  if (!value_) throw InvariantViolation("value() on the point at infinity");
  return *value_;
}

std::string ExtendedRational::to_string() const {
  return value_ ? mtf::to_string(*value_) : std::string("inf");
}

ExtendedRational ExtendedRational::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinity" || text == "+inf") return infinity();
  return ExtendedRational(parse_rational(text));
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.value_ == *b.value_;
}

bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.value_ < *b.value_;
}

}  // namespace mtf
