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
#include <string>
#include <vector>

#include "mtf/invariants.hpp"
#include "mtf/marked_sequence.hpp"
#include "mtf/numeric.hpp"

namespace mtf {

struct FiberChain {
  std::size_t index;
  /// l_i + 1 curves over the fiber.
  std::size_t length;
  friend bool operator==(const FiberChain&, const FiberChain&) = default;
};

struct DiscriminantReport {
  /// The two distinguished sections; always present.
  std::vector<std::string> sections{"Gamma", "conj(Gamma)"};
  std::vector<FiberChain> reducible_fiber_chains;
  std::vector<std::size_t> irreducible_fibers;
  /// Number of discriminant curves from the pull-back of O(1); zero in the Joyce case.
  std::size_t hyperplane_sections = 0;
  /// Marked indices accounting for the hyperplane-section curves.
  std::vector<std::size_t> hyperplane_indices;
  bool deformed = false;
  std::optional<std::size_t> r;
  std::optional<std::size_t> s;
  /// Discriminant curves are non-reduced in general; no multiplicity is computed.
  bool non_reduced_possible = true;
  /// Whether the residual of |N^v (x) N^v| has an effective member is not computed.
  std::string effective_remainder = "unknown";
};

DiscriminantReport discriminant_joyce(const MarkedSequence& seq);

/// Throws InvalidInput for semi-free input, where r and s are undefined.
DiscriminantReport discriminant_deformed(const MarkedSequence& seq);

struct BlowUpCenter {
  std::string name;
  /// Marked index i the curve is attached to; empty for the first two stages.
  std::optional<std::size_t> index;
  friend bool operator==(const BlowUpCenter&, const BlowUpCenter&) = default;
};

struct BlowUpStage {
  std::size_t number;
  std::vector<BlowUpCenter> centers;
  /// Indices i whose centers lie on E_2 (driven by l_i^+), stages 3 and later.
  std::vector<std::size_t> plus_indices;
  /// Indices i whose centers lie on conj(E_{n+2}) (driven by l_i^-), stages 3 and later.
  std::vector<std::size_t> minus_indices;
};

struct BlowUpSchedule {
  std::size_t m = 0;
  /// max l_i.
  std::size_t max_l = 0;
  std::vector<BlowUpStage> stages;
  /// Normal bundle of E_1 is nu^* O(l + 1, -1) with l = (C_1)^2.
  Integer self_intersection;
  Integer normal_bundle_first;
  Integer normal_bundle_second;
};

BlowUpSchedule blow_up_schedule(const MarkedSequence& seq);

}  // namespace mtf
