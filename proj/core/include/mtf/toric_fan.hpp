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
#include <vector>

#include "mtf/marked_sequence.hpp"
#include "mtf/numeric.hpp"

namespace mtf {

/// Primitive lattice vector in Z^2.
struct RayVec {
  Integer x;
  Integer y;

  RayVec operator-() const { return {-x, -y}; }
  friend RayVec operator+(const RayVec& a, const RayVec& b) { return {a.x + b.x, a.y + b.y}; }
  friend bool operator==(const RayVec& a, const RayVec& b) { return a.x == b.x && a.y == b.y; }
};

inline Integer det(const RayVec& a, const RayVec& b) { return a.x * b.y - a.y * b.x; }

/// One half v_1, ..., v_{n+2} of a centrally symmetric complete smooth fan.
/// The full fan is v_1, ..., v_{n+2}, -v_1, ..., -v_{n+2}; the real structure
/// swaps a ray with its negative.
///
/// Invariants (checked on construction, InvalidInput otherwise):
///   - every ray is primitive and non-zero;
///   - det(v_i, v_{i+1}) = 1 and det(v_{n+2}, -v_1) = 1;
///   - det(v_1, v_i) > 0 for i >= 2, so the rays are in strictly increasing
///     angular order inside one half-turn.
class HalfFan {
 public:
  explicit HalfFan(std::vector<RayVec> rays);

  std::size_t n() const { return rays_.size() - 2; }
  std::size_t size() const { return rays_.size(); }

  /// 1-based: 1 <= i <= n+2.
  const RayVec& ray(std::size_t i) const;

  /// Ray t of the doubled fan, 0-based and cyclic modulo 2(n+2).
  RayVec full_ray(std::ptrdiff_t t) const;

  const std::vector<RayVec>& rays() const { return rays_; }

  friend bool operator==(const HalfFan& a, const HalfFan& b) { return a.rays_ == b.rays_; }

 private:
  std::vector<RayVec> rays_;
};

/// Self-intersection numbers (C_i)^2 of the curves of one half of the cycle.
struct SelfIntersections {
  std::vector<Integer> values;  // values[i-1] = (C_i)^2

  /// Sum over the doubled cycle of 2(n+2) curves; equals 12 - 6(n+2).
  Integer cycle_total() const;
};

/// Unique half-fan with v_1 = (1,0), v_2 = (0,1) and det(v_1, v_i) = k_i.
/// Throws InvalidInput("invalid sequence: ...") if the unimodular chain cannot
/// be completed with lattice rays.
HalfFan fan_from_sequence(const MarkedSequence& seq);

/// True iff fan_from_sequence succeeds.
bool is_valid_sequence(const MarkedSequence& seq);

/// Weights seen from ray `marked` (1-based, 1 <= marked <= n+2).
MarkedSequence sequence_from_fan(const HalfFan& fan, std::size_t marked);

/// The same fan re-based so that ray `marked` becomes v_1 = (1,0) and its
/// successor v_2 = (0,1). Two (fan, mark) pairs are lattice-equivalent with
/// the marks matched iff their normalizations are equal.
HalfFan normalize_at(const HalfFan& fan, std::size_t marked);

/// v_{i-1} + v_{i+1} = -(C_i)^2 v_i, with neighbours of v_1 and v_{n+2}
/// taken through the negated half.
SelfIntersections self_intersections(const HalfFan& fan);

}  // namespace mtf
