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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtf/numeric.hpp"

namespace mtf {

/// The weight vector (k_2, ..., k_{n+2}) of a circle subgroup fixing one
/// component C_1 of the invariant anticanonical cycle. Entry k_i is the order
/// of the isotropy group on C_i.
///
/// The constructor enforces the shape rules (non-empty, positive entries,
/// k_2 = k_{n+2} = 1). Reachability from (1) is checked separately by
/// is_valid_sequence() / fan_from_sequence() in toric_fan.hpp.
class MarkedSequence {
 public:
  explicit MarkedSequence(std::vector<Integer> weights);
  MarkedSequence(std::initializer_list<long> weights);

  /// Comma-separated positive integers, e.g. "1,2,5,3,1".
  static MarkedSequence parse(std::string_view text);

  /// Number of CP^2 summands: the sequence has n+1 entries.
  std::size_t n() const { return weights_.size() - 1; }

  /// Paper indexing: 2 <= i <= n+2.
  const Integer& k(std::size_t i) const;

  std::span<const Integer> weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }

  MarkedSequence reversed() const;

  /// All entries equal to one (m = 1).
  bool is_semi_free() const;

  Integer max_weight() const;

  std::string to_string() const;

  friend bool operator==(const MarkedSequence& a, const MarkedSequence& b);
  /// Length first, then lexicographic on entries.
  friend bool operator<(const MarkedSequence& a, const MarkedSequence& b);

 private:
  std::vector<Integer> weights_;
};

/// Lexicographically smaller of the sequence and its reversal.
MarkedSequence canonical(const MarkedSequence& seq);

}  // namespace mtf
