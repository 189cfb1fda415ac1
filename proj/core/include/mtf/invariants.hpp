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
#include <optional>
#include <vector>

#include "mtf/marked_sequence.hpp"
#include "mtf/numeric.hpp"
#include "mtf/toric_fan.hpp"

namespace mtf {

/// One pass of the max-run decrement: entries first..last (paper indices,
/// 2 <= first <= last <= n+2) were the leftmost maximal run of the current
/// maximum and were each decreased by one.
struct ProcedureStep {
  std::size_t first;
  std::size_t last;
  friend bool operator==(const ProcedureStep&, const ProcedureStep&) = default;
};

struct ProcedureTrace {
  std::size_t n = 0;
  std::vector<ProcedureStep> steps;

  /// The invariant m: number of passes until the sequence is zero.
  std::size_t m() const { return steps.size(); }
};

/// Repeatedly decrement the leftmost maximal run of the largest entry until
/// every entry is zero.
ProcedureTrace procedure_a(const MarkedSequence& seq);

/// Multiplicities of the degree-one divisors S_i^+ and S_i^- in
/// Y = sum_l (S^+_{i_l - 1} + S^-_{j_l}). Indexed 1..n+2 through plus_at /
/// minus_at; the vectors themselves are 0-based.
struct YDivisor {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;

  std::size_t n() const { return plus.size() - 2; }
  std::size_t plus_at(std::size_t i) const { return plus.at(i - 1); }
  std::size_t minus_at(std::size_t i) const { return minus.at(i - 1); }
  std::size_t m() const;
};

/// Builds Y from the trace and checks its structural properties (disjoint
/// signs, S_1^+ and S_{n+2}^- with multiplicity one, sum l^+ = sum l^- = m).
YDivisor build_y(const ProcedureTrace& trace);

/// l_i = l_i^+ + l_i^-, the multiplicity of S_i^+ in Y + conj(Y).
struct LVector {
  std::vector<std::size_t> l;

  std::size_t n() const { return l.size() - 2; }
  std::size_t at(std::size_t i) const { return l.at(i - 1); }
  std::size_t total() const;
  std::size_t max() const;
  /// Sum of l_i is 2m.
  std::size_t m() const { return total() / 2; }
};

LVector l_vector(const YDivisor& y);

/// Convenience: procedure_a -> build_y -> l_vector.
LVector l_vector(const MarkedSequence& seq);

/// Multiplicities of the cycle components in the restriction Y|_S.
struct RestrictionMultiplicities {
  std::vector<Integer> on_c;          // [i-1] -> multiplicity of C_i
  std::vector<Integer> on_conjugate;  // [i-1] -> multiplicity of conj(C_i)
};

/// Accumulates the half-cycles S_a^+|_S = C_{a+1} + ... + conj(C_a) and
/// S_b^-|_S = C_b + ... + C_1 + conj(C_{n+2}) + ... + conj(C_{b+1}) over Y and
/// checks the identity Y|_S = mC + f - conj(f), i.e. (m + k_i, m - k_i) on
/// (C_i, conj(C_i)) for i >= 2 and (m, m) on C_1. InvariantViolation on
/// mismatch.
RestrictionMultiplicities restriction_multiplicities(const YDivisor& y, const MarkedSequence& seq);

enum class DeformationRoute {
  Criterion,      // r, s defined; deformable iff n + r - s > 0
  SemiFreeLeBrun  // all k_i = 1; r, s are not defined
};

struct RegularityReport {
  std::vector<std::size_t> regular;  // indices j with k_j = 1
  DeformationRoute route = DeformationRoute::Criterion;
  std::optional<std::size_t> r;
  std::optional<std::size_t> s;
  std::optional<long> slack;  // n + r - s
  bool deformable = false;
};

/// r = max{t : k_j = 1 for 2 <= j <= t}, s = min{t : k_j = 1 for t <= j <= n+2}.
/// Semi-free input reports route SemiFreeLeBrun, leaves r/s/slack empty and
/// marks it deformable when n >= 3.
RegularityReport regularity(const MarkedSequence& seq);

/// True iff some choice of fixed ray yields the all-ones sequence (m = 1).
bool is_lebrun(const HalfFan& fan);

}  // namespace mtf
