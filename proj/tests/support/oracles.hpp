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

// Independent reference computations used to check the library.

#include <cstddef>
#include <functional>
#include <vector>

#include "mtf/catalog.hpp"
#include "mtf/invariants.hpp"
#include "mtf/marked_sequence.hpp"
#include "mtf/minitwistor.hpp"
#include "mtf/numeric.hpp"

namespace mtf::testing {

/// Builds num/den in lowest terms; GMP's two-argument constructor does not reduce.
inline Rational reduced(long num, long den) {
  Rational value(num, den);
  value.canonicalize();
  return value;
}

/// Decides whether the sequence comes from a half-fan by searching for the
/// x-coordinates of v_3, ..., v_{n+2} in [-bound, bound] directly, rather
/// than solving for them. v_1 = (1,0), v_2 = (0,1), v_i = (x_i, k_i).
inline bool brute_force_valid(const MarkedSequence& seq, long bound) {
  const auto w = seq.weights();
  Integer px = 0;
  Integer py = 1;
  for (std::size_t idx = 1; idx < w.size(); ++idx) {
    bool found = false;
    for (long x = -bound; x <= bound && !found; ++x) {
      if (px * w[idx] - py * x == 1) {
        px = x;
        py = w[idx];
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// Calls fn on every sequence (1, a_3, ..., a_{n+1}, 1) with 1 <= a_i <= bound.
inline void for_each_bounded(std::size_t n, long bound, const std::function<void(const MarkedSequence&)>& fn) {
  std::vector<long> inner(n >= 1 ? n - 1 : 0, 1);
  while (true) {
    std::vector<Integer> w;
    w.emplace_back(1);
    for (long v : inner) w.emplace_back(v);
    if (n >= 1) w.emplace_back(1);
    fn(MarkedSequence(w));
    std::size_t pos = 0;
    while (pos < inner.size() && inner[pos] == bound) inner[pos++] = 1;
    if (pos == inner.size()) return;
    ++inner[pos];
  }
}

/// Every valid level-n sequence in both orientations, sorted and deduplicated.
inline std::vector<MarkedSequence> all_marked(std::size_t n) {
  std::vector<MarkedSequence> out;
  for (const auto& seq : enumerate_marked(n)) {
    out.push_back(seq);
    if (!(seq.reversed() == seq)) out.push_back(seq.reversed());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// c u_1 u_{n+2} prod_{i=2}^{n+1} (u_1 - lambda_i u_{n+2})^{l_i}, evaluated directly.
inline Rational evaluate_product(const LVector& lvec, const ConformalInvariant& lambdas, int c, const Rational& u1,
                                 const Rational& ulast) {
  Rational value = c * u1 * ulast;
  for (std::size_t i = 2; i + 1 <= lvec.l.size(); ++i) {
    const Rational factor = u1 - lambdas.at(i).value() * ulast;
    for (std::size_t rep = 0; rep < lvec.at(i); ++rep) value *= factor;
  }
  return value;
}

/// Sum over d of coefficient_d u_1^d u_{n+2}^{deg-d}.
inline Rational evaluate_form(const BinaryForm& form, const Rational& u1, const Rational& ulast) {
  Rational value = 0;
  const std::size_t deg = form.degree();
  for (std::size_t d = 0; d < form.coefficients.size(); ++d) {
    Rational term = form.coefficients[d];
    for (std::size_t e = 0; e < d; ++e) term *= u1;
    for (std::size_t e = 0; e < deg - d; ++e) term *= ulast;
    value += term;
  }
  return value;
}

/// Evaluates Q at z_d = u_1^d u_{n+2}^{m-d}.
inline Rational evaluate_quadratic_on_curve(const QuadraticForm& q, const Rational& u1, const Rational& ulast) {
  auto z = [&](std::size_t d) {
    Rational v = 1;
    for (std::size_t e = 0; e < d; ++e) v *= u1;
    for (std::size_t e = 0; e < q.m - d; ++e) v *= ulast;
    return v;
  };
  Rational value = 0;
  for (const auto& [key, coef] : q.terms) value += coef * z(key.first) * z(key.second);
  return value;
}

}  // namespace mtf::testing
