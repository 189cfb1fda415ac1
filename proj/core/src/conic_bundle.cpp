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

#include "mtf/conic_bundle.hpp"

#include <string>

#include "mtf/error.hpp"
#include "mtf/toric_fan.hpp"

namespace mtf {
namespace {

std::string idx(std::size_t i) {
  const std::string digits = std::to_string(i);
  return digits.size() == 1 ? digits : "{" + digits + "}";
}

void fill_fibers(DiscriminantReport& report, const LVector& lvec, std::size_t lo, std::size_t hi) {
  // Entries with lo < i < hi.
  for (std::size_t i = lo + 1; i < hi; ++i) {
    if (lvec.at(i) > 0) {
      report.reducible_fiber_chains.push_back({i, lvec.at(i) + 1});
    } else {
      report.irreducible_fibers.push_back(i);
    }
  }
}

}  // namespace

DiscriminantReport discriminant_joyce(const MarkedSequence& seq) {
  const LVector lvec = l_vector(seq);
  DiscriminantReport report;
  fill_fibers(report, lvec, 1, seq.n() + 2);
  return report;
}

DiscriminantReport discriminant_deformed(const MarkedSequence& seq) {
  if (seq.is_semi_free()) {
    throw InvalidInput("semi-free: handled by LeBrun theory; r and s are undefined");
  }
  const LVector lvec = l_vector(seq);
  const RegularityReport reg = regularity(seq);
  const std::size_t r = *reg.r;
  const std::size_t s = *reg.s;
  const std::size_t last = seq.n() + 2;
  DiscriminantReport report;
  report.deformed = true;
  report.r = r;
  report.s = s;
  fill_fibers(report, lvec, r, s);
  for (std::size_t i = 2; i < r; ++i) report.hyperplane_indices.push_back(i);
  for (std::size_t i = s; i < last; ++i) report.hyperplane_indices.push_back(i);
  report.hyperplane_sections = report.hyperplane_indices.size();
  ensure(static_cast<long>(report.hyperplane_sections) == *reg.slack,
         "hyperplane-section count differs from n + r - s");
  for (std::size_t i : report.hyperplane_indices) {
    ensure(lvec.at(i) == 0, "regular end entries must carry l_i = 0");
  }
  return report;
}

BlowUpSchedule blow_up_schedule(const MarkedSequence& seq) {
  const ProcedureTrace trace = procedure_a(seq);
  const YDivisor y = build_y(trace);
  const LVector lvec = l_vector(y);
  const std::size_t last = seq.n() + 2;

  BlowUpSchedule schedule;
  schedule.m = trace.m();
  schedule.max_l = lvec.max();
  schedule.self_intersection = self_intersections(fan_from_sequence(seq)).values.at(0);
  schedule.normal_bundle_first = schedule.self_intersection + 1;
  schedule.normal_bundle_second = -1;

  schedule.stages.push_back({1, {{"C_1", std::nullopt}, {"\\bar{C}_1", std::nullopt}}, {}, {}});
  if (schedule.m == 1) return schedule;

  const std::string n2 = idx(last);
  schedule.stages.push_back({2,
                             {{"C_2", std::nullopt},
                              {"\\bar{C}_" + n2, std::nullopt},
                              {"\\bar{C}_2", std::nullopt},
                              {"C_" + n2, std::nullopt}},
                             {},
                             {}});

  for (std::size_t t = 3; t <= schedule.max_l + 2; ++t) {
    BlowUpStage stage{t, {}, {}, {}};
    const std::size_t threshold = t - 2;
    // Exceptional divisor over the stage-(t-1) curve at index i: F_i, F'_i, F''_i, ...
    const std::string primes(t >= 4 ? t - 4 : 0, '\'');
    for (std::size_t i = 2; i < last; ++i) {
      if (y.plus_at(i) >= threshold) {
        stage.plus_indices.push_back(i);
        const std::string name = t == 3 ? "E_2\\cap S_" + idx(i) + "^-"
                                        : "F" + primes + "_" + idx(i) + "\\cap E_2";
        stage.centers.push_back({name, i});
      }
      if (y.minus_at(i) >= threshold) {
        stage.minus_indices.push_back(i);
        const std::string name = t == 3 ? "\\bar{E}_" + n2 + "\\cap S_" + idx(i) + "^-"
                                        : "F" + primes + "_" + idx(i) + "\\cap \\bar{E}_" + n2;
        stage.centers.push_back({name, i});
      }
    }
    ensure(!stage.centers.empty(), "blow-up stage " + std::to_string(t) + " has no centers");
    schedule.stages.push_back(std::move(stage));
  }
  ensure(schedule.stages.size() == schedule.max_l + 2, "schedule must have M + 2 stages");
  return schedule;
}

}  // namespace mtf
