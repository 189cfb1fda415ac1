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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "mtf/conic_bundle.hpp"
#include "mtf/error.hpp"
#include "oracles.hpp"

using namespace mtf;

namespace {

using Indices = std::vector<std::size_t>;

}  // namespace

TEST_SUITE("conic_bundle") {
  TEST_CASE("Joyce discriminant of (1,2,3,1)") {
    const auto report = discriminant_joyce(MarkedSequence{1, 2, 3, 1});
    CHECK(report.sections.size() == 2);
    CHECK(report.reducible_fiber_chains == std::vector<FiberChain>{{2, 2}, {3, 2}, {4, 3}});
    CHECK(report.irreducible_fibers.empty());
    CHECK(report.hyperplane_sections == 0);
    CHECK_FALSE(report.deformed);
    CHECK(report.effective_remainder == "unknown");
  }

  TEST_CASE("Joyce discriminant of semi-free n = 3 and of (1,2,1,2,1)") {
    const auto semi = discriminant_joyce(MarkedSequence{1, 1, 1, 1});
    CHECK(semi.reducible_fiber_chains.empty());
    CHECK(semi.irreducible_fibers == Indices{2, 3, 4});
    const auto ones = discriminant_joyce(MarkedSequence{1, 2, 1, 2, 1});
    CHECK(ones.reducible_fiber_chains == std::vector<FiberChain>{{2, 2}, {3, 2}, {4, 2}, {5, 2}});
  }

  TEST_CASE("deformed discriminant examples") {
    const auto a = discriminant_deformed(MarkedSequence{1, 2, 3, 1, 1});
    CHECK(a.deformed);
    CHECK(a.hyperplane_sections == 1);
    CHECK(a.hyperplane_indices == Indices{5});
    CHECK(a.reducible_fiber_chains == std::vector<FiberChain>{{3, 2}, {4, 3}});
    CHECK(a.irreducible_fibers.empty());

    CHECK(discriminant_deformed(MarkedSequence{1, 2, 1, 2, 1, 1, 1, 1}).hyperplane_sections == 3);
    for (std::size_t n = 2; n <= 8; ++n) {
      std::vector<Integer> w;
      for (std::size_t j = 1; j <= n; ++j) w.emplace_back(static_cast<unsigned long>(j));
      w.emplace_back(1);
      CHECK(discriminant_deformed(MarkedSequence(w)).hyperplane_sections == 0);
    }
    CHECK_THROWS_AS(discriminant_deformed(MarkedSequence{1, 1, 1}), InvalidInput);
  }

  TEST_CASE("Joyce and deformed reports reconcile (n <= 6)") {
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const auto& seq : testing::all_marked(n)) {
        CAPTURE(seq.to_string());
        const auto lvec = l_vector(seq);
        const auto joyce = discriminant_joyce(seq);
        for (const auto& chain : joyce.reducible_fiber_chains) {
          CHECK(chain.length == lvec.at(chain.index) + 1);
          CHECK(lvec.at(chain.index) > 0);
          // A chain consists of the two end curves and l_i - 1 inserted ones.
          CHECK(chain.length == 2 + (lvec.at(chain.index) - 1));
        }
        for (std::size_t i : joyce.irreducible_fibers) CHECK(lvec.at(i) == 0);
        std::set<std::size_t> joyce_all(joyce.irreducible_fibers.begin(), joyce.irreducible_fibers.end());
        for (const auto& chain : joyce.reducible_fiber_chains) joyce_all.insert(chain.index);
        std::set<std::size_t> interior;
        for (std::size_t i = 2; i <= n + 1; ++i) interior.insert(i);
        CHECK(joyce_all == interior);

        if (seq.is_semi_free()) continue;
        const auto reg = regularity(seq);
        const auto deformed = discriminant_deformed(seq);
        CHECK(static_cast<long>(deformed.hyperplane_sections) == *reg.slack);
        std::set<std::size_t> deformed_all(deformed.irreducible_fibers.begin(), deformed.irreducible_fibers.end());
        for (const auto& chain : deformed.reducible_fiber_chains) {
          CHECK((*reg.r < chain.index && chain.index < *reg.s));
          CHECK(deformed_all.insert(chain.index).second);
        }
        for (std::size_t i : deformed.hyperplane_indices) {
          CHECK(joyce_all.count(i) == 1);
          CHECK(std::count(joyce.irreducible_fibers.begin(), joyce.irreducible_fibers.end(), i) == 1);
          CHECK(deformed_all.insert(i).second);
        }
        // Index r always carries a reducible Joyce fiber and leaves the deformed report.
        CHECK(lvec.at(*reg.r) > 0);
        CHECK(deformed_all.insert(*reg.r).second);
        CHECK(deformed_all == interior);
        // Inside (r, s) both reports agree entry by entry.
        for (const auto& chain : joyce.reducible_fiber_chains) {
          if (*reg.r < chain.index && chain.index < *reg.s) {
            CHECK(std::count(deformed.reducible_fiber_chains.begin(), deformed.reducible_fiber_chains.end(),
                             chain) == 1);
          }
        }
      }
    }
  }

  TEST_CASE("blow-up schedule examples") {
    const auto semi = blow_up_schedule(MarkedSequence{1, 1, 1, 1});
    CHECK(semi.stages.size() == 1);
    CHECK(semi.stages[0].centers.size() == 2);

    const auto a = blow_up_schedule(MarkedSequence{1, 2, 1, 2, 1});
    CHECK(a.max_l == 1);
    CHECK(a.stages.size() == 3);
    CHECK(a.stages[1].centers.size() == 4);

    const auto b = blow_up_schedule(MarkedSequence{1, 2, 5, 3, 1});
    CHECK(b.max_l == 3);
    REQUIRE(b.stages.size() == 5);
    CHECK(b.stages[2].plus_indices == Indices{2, 3});
    CHECK(b.stages[2].minus_indices == Indices{4, 5});
    CHECK(b.stages[3].plus_indices == Indices{3});
    CHECK(b.stages[3].minus_indices == Indices{4, 5});
    CHECK(b.stages[4].plus_indices == Indices{3});
    CHECK(b.stages[4].minus_indices.empty());
    CHECK(b.stages[2].centers.front().name == "E_2\\cap S_2^-");
  }

  TEST_CASE("blow-up schedule structure (n <= 6)") {
    for (std::size_t n = 0; n <= 6; ++n) {
      for (const auto& seq : testing::all_marked(n)) {
        CAPTURE(seq.to_string());
        const auto schedule = blow_up_schedule(seq);
        const auto y = build_y(procedure_a(seq));
        const auto lvec = l_vector(y);
        CHECK(schedule.max_l == lvec.max());
        if (lvec.m() == 1) {
          CHECK(schedule.stages.size() == 1);
        } else {
          CHECK(schedule.stages.size() == lvec.max() + 2);
          for (std::size_t t = 3; t <= schedule.stages.size(); ++t) {
            Indices plus;
            Indices minus;
            for (std::size_t i = 2; i <= n + 1; ++i) {
              if (y.plus_at(i) >= t - 2) plus.push_back(i);
              if (y.minus_at(i) >= t - 2) minus.push_back(i);
            }
            CHECK(schedule.stages[t - 1].plus_indices == plus);
            CHECK(schedule.stages[t - 1].minus_indices == minus);
          }
        }
        const auto si = self_intersections(fan_from_sequence(seq));
        CHECK(schedule.self_intersection == si.values.at(0));
        CHECK(schedule.normal_bundle_first == si.values.at(0) + 1);
        CHECK(schedule.normal_bundle_second == -1);
      }
    }
  }
}
