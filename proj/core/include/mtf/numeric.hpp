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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace mtf {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);

/// Reduced "p/q"; integers print without a denominator.
std::string to_string(const Rational& value);

/// Accepts "p", "-p", "p/q". Throws InvalidInput on anything else or q == 0.
Rational parse_rational(std::string_view text);

Integer parse_integer(std::string_view text);

/// Narrowing with a range check; used where a count indexes memory.
std::size_t to_size(const Integer& value);

/// A rational number or the point at infinity of the projective line.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational value) : value_(std::move(value)) { value_->canonicalize(); }  // NOLINT
  ExtendedRational(long value) : value_(Rational(value)) {}       // NOLINT

  static ExtendedRational infinity() {
    ExtendedRational r;
    r.value_.reset();
    return r;
  }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  /// "inf" for infinity, otherwise to_string of the rational.
  std::string to_string() const;

  /// Accepts "inf", "infinity" or any rational.
  static ExtendedRational parse(std::string_view text);

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  /// Infinity sorts above every finite value.
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b);

 private:
  std::optional<Rational> value_ = Rational(0);
};

}  // namespace mtf
