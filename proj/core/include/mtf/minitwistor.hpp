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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtf/invariants.hpp"
#include "mtf/marked_sequence.hpp"
#include "mtf/numeric.hpp"

namespace mtf {

/// The n+2 marked points lambda_1 = 0 < lambda_2 < ... < lambda_{n+1} <
/// lambda_{n+2} = inf on the parameter line of the pencil.
class ConformalInvariant {
 public:
  explicit ConformalInvariant(std::vector<ExtendedRational> lambdas);

  /// 0, 1, 2, ..., n, inf.
  static ConformalInvariant standard(std::size_t n);

  /// Comma-separated list of n+2 values, first "0", last "inf".
  static ConformalInvariant parse(std::string_view text);

  std::size_t n() const { return lambdas_.size() - 2; }
  /// 1-based.
  const ExtendedRational& at(std::size_t i) const { return lambdas_.at(i - 1); }
  const std::vector<ExtendedRational>& values() const { return lambdas_; }

 private:
  std::vector<ExtendedRational> lambdas_;
};

/// Homogeneous form in (u_1, u_{n+2}): coefficients[d] multiplies
/// u_1^d u_{n+2}^{degree - d}.
struct BinaryForm {
  std::vector<Rational> coefficients;

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  bool is_zero() const;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// Q(z_0, ..., z_m) as a sparse map (a, b) -> coefficient of z_a z_b, a <= b.
struct QuadraticForm {
  std::size_t m = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> terms;

  /// Substitutes z_d = u_1^d u_{n+2}^{m-d}; the result has degree 2m.
  BinaryForm pullback() const;
};

/// c u_1 (u_1 - lambda_2 u_{n+2})^{l_2} ... (u_1 - lambda_{n+1} u_{n+2})^{l_{n+1}} u_{n+2}.
BinaryForm rhs_polynomial(const LVector& lvec, const ConformalInvariant& lambdas, int c_sign);

/// Balanced split: the coefficient of u_1^d u_{n+2}^{2m-d} goes to
/// z_{ceil(d/2)} z_{floor(d/2)}.
QuadraticForm quadratic_split(const BinaryForm& form, std::size_t m);

/// Equality modulo the ideal of the rational normal curve, decided on pullbacks.
bool equivalent_on_normal_curve(const QuadraticForm& a, const QuadraticForm& b);

struct SingularityRecord {
  enum class Kind { CyclicQuotientPair, RealA };
  Kind kind;
  /// m for the quotient pair C^2/Z_m, l_i - 1 for A_{l_i - 1}.
  std::size_t order;
  /// Marked index i for real A-points; empty for the P_inf pair.
  std::optional<std::size_t> index;
  std::optional<ExtendedRational> lambda;

  std::string label() const;
};

/// One C^2/Z_m pair at P_inf, conj(P_inf) when m > 1 and one A_{l_i - 1}
/// point per index with l_i > 1.
std::vector<SingularityRecord> singularities(const LVector& lvec, const ConformalInvariant& lambdas,
                                             std::size_t m);

struct FiberPoint {
  std::size_t index;
  ExtendedRational lambda;
};

/// Marked points with l_i > 0; always contains lambda_{n+2} = inf.
std::vector<FiberPoint> reducible_fibers(const LVector& lvec, const ConformalInvariant& lambdas);

/// Marked points with l_i = 0.
std::vector<FiberPoint> irreducible_marked_fibers(const LVector& lvec, const ConformalInvariant& lambdas);

/// #{i : l_i > 0} - 3; empty when m = 1.
std::optional<long> moduli_dimension(const LVector& lvec);

/// {i : l_i = 0}: twistor lines L_i fixed by the circle subgroup.
std::vector<std::size_t> fixed_lines(const LVector& lvec);

struct MinitwistorModel {
  std::size_t n = 0;
  std::size_t m = 0;
  ConformalInvariant lambdas = ConformalInvariant::standard(0);
  int c_sign = 1;
  LVector l;
  BinaryForm rhs;
  QuadraticForm q;
  std::size_t ambient_dim = 0;     // m + 2
  std::size_t surface_degree = 0;  // 2m
  std::size_t dim_vm = 0;          // m + 1
  std::size_t dim_wm = 0;          // m + 3
  std::vector<SingularityRecord> singular_points;
  std::vector<FiberPoint> reducible;
  std::vector<FiberPoint> irreducible;
  std::optional<long> moduli_dim;
  std::vector<std::size_t> fixed;
};

MinitwistorModel build_minitwistor(const MarkedSequence& seq, const ConformalInvariant& lambdas,
                                   int c_sign = 1);

}  // namespace mtf
