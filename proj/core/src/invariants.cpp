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

#include "mtf/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mtf/error.hpp"

namespace mtf {

ProcedureTrace procedure_a(const MarkedSequence& seq) {
  // Rejects sequences that do not come from a fan, naming the failed rule.
  (void)fan_from_sequence(seq);
  std::vector<Integer> current(seq.weights().begin(), seq.weights().end());
  Integer budget = 0;
  for (const auto& w : current) budget += w;

  ProcedureTrace trace;
  trace.n = seq.n();
  while (true) {
    auto top = std::max_element(current.begin(), current.end());
    if (*top == 0) break;
    // max_element returns the first maximum: the smallest index i.
    const Integer peak = *top;
    auto run_end = top;
    while (std::next(run_end) != current.end() && *std::next(run_end) == peak) ++run_end;
    for (auto it = top; it != std::next(run_end); ++it) *it -= 1;

    const auto first = static_cast<std::size_t>(top - current.begin()) + 2;
    const auto last = static_cast<std::size_t>(run_end - current.begin()) + 2;
    trace.steps.push_back({first, last});
    ensure(trace.steps.size() <= budget, "Procedure (A) exceeded sum of k_i steps");
  }
  ensure(!trace.steps.empty() && trace.steps.back() == ProcedureStep{2, seq.n() + 2},
         "final pass must cover the whole sequence");
  return trace;
}

std::size_t YDivisor::m() const { return std::accumulate(plus.begin(), plus.end(), std::size_t{0}); }

YDivisor build_y(const ProcedureTrace& trace) {
  const std::size_t count = trace.n + 2;
  YDivisor y{std::vector<std::size_t>(count, 0), std::vector<std::size_t>(count, 0)};
  for (const auto& step : trace.steps) {
    ++y.plus[step.first - 2];  // S^+_{i_l - 1}
    ++y.minus[step.last - 1];  // S^-_{j_l}
  }
  const std::size_t m = trace.m();
  for (std::size_t i = 1; i <= count; ++i) {
    ensure(y.plus_at(i) == 0 || y.minus_at(i) == 0,
           "Y contains both S_" + std::to_string(i) + "^+ and S_" + std::to_string(i) + "^-");
  }
  ensure(y.plus_at(1) == 1 && y.minus_at(count) == 1, "Y must contain S_1^+ and S_{n+2}^- once");
  ensure(y.minus_at(1) == 0 && y.plus_at(count) == 0, "Y must not contain S_1^- or S_{n+2}^+");
  ensure(y.m() == m &&
             std::accumulate(y.minus.begin(), y.minus.end(), std::size_t{0}) == m,
         "sum of l^+ and sum of l^- must both equal m");
  return y;
}

std::size_t LVector::total() const { return std::accumulate(l.begin(), l.end(), std::size_t{0}); }

std::size_t LVector::max() const { return *std::max_element(l.begin(), l.end()); }

LVector l_vector(const YDivisor& y) {
  LVector out;
  out.l.resize(y.plus.size());
  std::transform(y.plus.begin(), y.plus.end(), y.minus.begin(), out.l.begin(), std::plus<>{});
  ensure(out.l.front() == 1 && out.l.back() == 1, "l_1 = l_{n+2} = 1 violated");
  return out;
}

LVector l_vector(const MarkedSequence& seq) { return l_vector(build_y(procedure_a(seq))); }

RestrictionMultiplicities restriction_multiplicities(const YDivisor& y, const MarkedSequence& seq) {
  const std::size_t count = y.plus.size();
  ensure(count == seq.n() + 2, "Y and sequence disagree on n");
  RestrictionMultiplicities out{std::vector<Integer>(count, 0), std::vector<Integer>(count, 0)};
  for (std::size_t a = 1; a <= count; ++a) {
    const Integer mult = static_cast<unsigned long>(y.plus_at(a));
    if (mult == 0) continue;
    for (std::size_t i = a + 1; i <= count; ++i) out.on_c[i - 1] += mult;
    for (std::size_t i = 1; i <= a; ++i) out.on_conjugate[i - 1] += mult;
  }
  for (std::size_t b = 1; b <= count; ++b) {
    const Integer mult = static_cast<unsigned long>(y.minus_at(b));
    if (mult == 0) continue;
    for (std::size_t i = 1; i <= b; ++i) out.on_c[i - 1] += mult;
    for (std::size_t i = b + 1; i <= count; ++i) out.on_conjugate[i - 1] += mult;
  }
  const Integer m = static_cast<unsigned long>(y.m());
  ensure(out.on_c[0] == m && out.on_conjugate[0] == m, "C_1 must appear with multiplicity m");
  for (std::size_t i = 2; i <= count; ++i) {
    ensure(out.on_c[i - 1] == m + seq.k(i) && out.on_conjugate[i - 1] == m - seq.k(i),
           "restriction identity fails at C_" + std::to_string(i));
  }
  return out;
}

RegularityReport regularity(const MarkedSequence& seq) {
  RegularityReport report;
  const std::size_t last = seq.n() + 2;
  for (std::size_t j = 2; j <= last; ++j) {
    if (seq.k(j) == 1) report.regular.push_back(j);
  }
  if (seq.is_semi_free()) {
    report.route = DeformationRoute::SemiFreeLeBrun;
    report.deformable = seq.n() >= 3;
    return report;
  }
  std::size_t r = 2;
  while (r + 1 <= last && seq.k(r + 1) == 1) ++r;
  std::size_t s = last;
  while (s - 1 >= 2 && seq.k(s - 1) == 1) --s;
  ensure(2 <= r && r < s && s <= last, "expected 2 <= r < s <= n+2");
  const long slack = static_cast<long>(seq.n()) + static_cast<long>(r) - static_cast<long>(s);
  ensure(slack >= 0, "n + r - s must be non-negative");
  report.r = r;
  report.s = s;
  report.slack = slack;
  report.deformable = slack > 0;
  return report;
}

bool is_lebrun(const HalfFan& fan) {
  for (std::size_t mark = 1; mark <= fan.size(); ++mark) {
    if (sequence_from_fan(fan, mark).is_semi_free()) return true;
  }
  return false;
}

}  // namespace mtf
