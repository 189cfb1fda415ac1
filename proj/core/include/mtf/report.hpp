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

#include <nlohmann/json.hpp>
#include <string>

#include "mtf/catalog.hpp"
#include "mtf/conic_bundle.hpp"
#include "mtf/invariants.hpp"
#include "mtf/marked_sequence.hpp"
#include "mtf/minitwistor.hpp"

namespace mtf {

/// Object keys are emitted in sorted order, so dumps are byte-deterministic.
using Json = nlohmann::json;

/// Two-space indented dump followed by a newline.
std::string dump(const Json& value);

Json invariants_json(const MarkedSequence& seq);
Json regularity_json(const RegularityReport& report);
Json model_json(const MinitwistorModel& model);
Json binary_form_json(const BinaryForm& form);
Json quadratic_json(const QuadraticForm& q);
Json discriminant_json(const DiscriminantReport& report);
Json schedule_json(const BlowUpSchedule& schedule);
Json marked_class_json(const MarkedClass& cls);
Json catalog_class_json(const CatalogClass& cls);
Json delta_json(const DeltaTable& table);

/// "z_{m+1}z_{m+2} = Q" in LaTeX, e.g. "z_2z_3 = z_0z_1".
std::string equation_latex(const MinitwistorModel& model);
/// Plain-text form, e.g. "z_2*z_3 = z_0*z_1".
std::string equation_text(const MinitwistorModel& model);
std::string quadratic_latex(const QuadraticForm& q);
std::string quadratic_text(const QuadraticForm& q);
/// Right-hand side in u_1 and u_{n+2}.
std::string binary_form_text(const BinaryForm& form, std::size_t n);
std::string binary_form_latex(const BinaryForm& form, std::size_t n);

/// LaTeX tabular summarizing a discriminant report.
std::string discriminant_latex(const DiscriminantReport& report);
std::string discriminant_text(const DiscriminantReport& report);
std::string schedule_text(const BlowUpSchedule& schedule);
std::string schedule_latex(const BlowUpSchedule& schedule);
std::string invariants_text(const MarkedSequence& seq);
std::string model_text(const MinitwistorModel& model);

/// Index in LaTeX subscript form: single digits bare, longer ones braced.
std::string latex_index(std::size_t i);

}  // namespace mtf
