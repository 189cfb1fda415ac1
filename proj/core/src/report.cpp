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

#include "mtf/report.hpp"

#include <sstream>
#include <utility>
#include <vector>

namespace mtf {
namespace {

Json optional_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }
Json optional_json(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

template <typename T>
std::string join(const std::vector<T>& values, const std::string& sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << sep;
    out << values[i];
  }
  return out.str();
}

std::string latex_exponent(std::size_t e) {
  if (e == 1) return "";
  return "^" + latex_index(e);
}

/// Renders sum(coef * monomial); monomials are preformatted.
std::string format_sum(const std::vector<std::pair<Rational, std::string>>& terms, bool latex) {
  std::string out;
  for (const auto& [coef, mono] : terms) {
    if (coef == 0) continue;
    const bool negative = coef < 0;
    const Rational magnitude = abs(coef);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) {
      if (latex && magnitude.get_den() != 1) {
        out += "\\frac{" + to_string(Integer(magnitude.get_num())) + "}{" +
               to_string(Integer(magnitude.get_den())) + "}";
      } else {
        out += to_string(magnitude);
        if (!latex) out += "*";
      }
    }
    out += mono;
  }
  return out.empty() ? "0" : out;
}

std::string z_monomial(std::size_t a, std::size_t b, bool latex) {
  const std::string za = "z_" + (latex ? latex_index(a) : std::to_string(a));
  const std::string zb = "z_" + (latex ? latex_index(b) : std::to_string(b));
  if (a == b) return za + "^2";
  return latex ? za + zb : za + "*" + zb;
}

std::string u_monomial(std::size_t d, std::size_t rest, std::size_t last, bool latex) {
  std::vector<std::string> parts;
  const std::string u_last = "u_" + (latex ? latex_index(last) : std::to_string(last));
  auto power = [&](const std::string& base, std::size_t e) {
    if (latex) return base + latex_exponent(e);
    return e == 1 ? base : base + "^" + std::to_string(e);
  };
  if (d > 0) parts.push_back(power("u_1", d));
  if (rest > 0) parts.push_back(power(u_last, rest));
  return join(parts, latex ? "" : "*");
}

std::string steps_text(const ProcedureTrace& trace) {
  std::vector<std::string> parts;
  for (const auto& step : trace.steps) {
    parts.push_back("(" + std::to_string(step.first) + "," + std::to_string(step.last) + ")");
  }
  return join(parts, " ");
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

std::string dump(const Json& value) { return value.dump(2) + "\n"; }

std::string latex_index(std::size_t i) {
  const std::string digits = std::to_string(i);
  return digits.size() == 1 ? digits : "{" + digits + "}";
}

Json regularity_json(const RegularityReport& report) {
  Json out;
  out["regular_indices"] = report.regular;
  out["route"] = report.route == DeformationRoute::Criterion ? "criterion" : "semi-free-lebrun";
  out["r"] = optional_json(report.r);
  out["s"] = optional_json(report.s);
  out["slack"] = optional_json(report.slack);
  out["deformable"] = report.deformable;
  return out;
}

Json invariants_json(const MarkedSequence& seq) {
  const ProcedureTrace trace = procedure_a(seq);
  const YDivisor y = build_y(trace);
  const LVector lvec = l_vector(y);
  const RestrictionMultiplicities rm = restriction_multiplicities(y, seq);
  const RegularityReport reg = regularity(seq);
  Json out;
  out["n"] = seq.n();
  out["k"] = seq.to_string();
  out["m"] = trace.m();
  out["trace"] = Json::array();
  for (const auto& step : trace.steps) out["trace"].push_back({step.first, step.last});
  out["l_plus"] = y.plus;
  out["l_minus"] = y.minus;
  out["l"] = lvec.l;
  Json on_c = Json::array();
  Json on_conj = Json::array();
  for (const auto& v : rm.on_c) on_c.push_back(to_string(v));
  for (const auto& v : rm.on_conjugate) on_conj.push_back(to_string(v));
  out["restriction"] = {{"on_c", on_c}, {"on_conjugate", on_conj}};
  out["r"] = optional_json(reg.r);
  out["s"] = optional_json(reg.s);
  out["slack"] = optional_json(reg.slack);
  out["deformable"] = reg.deformable;
  out["semi_free"] = seq.is_semi_free();
  return out;
}

Json binary_form_json(const BinaryForm& form) {
  Json coeffs = Json::array();
  for (const auto& c : form.coefficients) coeffs.push_back(to_string(c));
  return {{"degree", form.degree()}, {"coefficients", coeffs}};
}

Json quadratic_json(const QuadraticForm& q) {
  Json terms = Json::array();
  for (const auto& [key, coef] : q.terms) {
    if (coef == 0) continue;
    terms.push_back({{"a", key.first}, {"b", key.second}, {"coefficient", to_string(coef)}});
  }
  return {{"m", q.m}, {"terms", terms}};
}

Json model_json(const MinitwistorModel& model) {
  Json out;
  out["n"] = model.n;
  out["m"] = model.m;
  out["c"] = model.c_sign;
  Json lambdas = Json::array();
  for (const auto& v : model.lambdas.values()) lambdas.push_back(v.to_string());
  out["lambda"] = lambdas;
  out["l"] = model.l.l;
  out["rhs"] = binary_form_json(model.rhs);
  out["q"] = quadratic_json(model.q);
  out["equation_latex"] = equation_latex(model);
  out["equation_text"] = equation_text(model);
  out["ambient_dim"] = model.ambient_dim;
  out["surface_degree"] = model.surface_degree;
  out["dim_vm"] = model.dim_vm;
  out["dim_wm"] = model.dim_wm;
  Json sing = Json::array();
  for (const auto& s : model.singular_points) {
    Json entry;
    const bool pair = s.kind == SingularityRecord::Kind::CyclicQuotientPair;
    entry["kind"] = pair ? "cyclic-quotient-pair" : "real-A";
    entry["order"] = s.order;
    entry["label"] = s.label();
    entry["index"] = optional_json(s.index);
    entry["location"] = pair ? "P_inf/conj(P_inf)" : "lambda=" + s.lambda->to_string();
    sing.push_back(entry);
  }
  out["singularities"] = sing;
  auto fibers = [](const std::vector<FiberPoint>& points) {
    Json arr = Json::array();
    for (const auto& p : points) arr.push_back({{"index", p.index}, {"lambda", p.lambda.to_string()}});
    return arr;
  };
  out["reducible_fibers"] = fibers(model.reducible);
  out["irreducible_marked_fibers"] = fibers(model.irreducible);
  out["moduli_dim"] = optional_json(model.moduli_dim);
  out["fixed_lines"] = model.fixed;
  return out;
}

Json discriminant_json(const DiscriminantReport& report) {
  Json out;
  out["sections"] = report.sections;
  Json chains = Json::array();
  for (const auto& chain : report.reducible_fiber_chains) {
    chains.push_back({{"index", chain.index}, {"length", chain.length}});
  }
  out["reducible_fiber_chains"] = chains;
  out["irreducible_fibers"] = report.irreducible_fibers;
  out["hyperplane_sections"] = report.hyperplane_sections;
  out["hyperplane_indices"] = report.hyperplane_indices;
  out["deformed"] = report.deformed;
  out["r"] = optional_json(report.r);
  out["s"] = optional_json(report.s);
  out["non_reduced_possible"] = report.non_reduced_possible;
  out["effective_remainder"] = report.effective_remainder;
  return out;
}

Json schedule_json(const BlowUpSchedule& schedule) {
  Json out;
  out["m"] = schedule.m;
  out["max_l"] = schedule.max_l;
  out["stage_count"] = schedule.stages.size();
  out["self_intersection_c1"] = to_string(schedule.self_intersection);
  out["normal_bundle"] = {to_string(schedule.normal_bundle_first), to_string(schedule.normal_bundle_second)};
  Json stages = Json::array();
  for (const auto& stage : schedule.stages) {
    Json centers = Json::array();
    for (const auto& c : stage.centers) centers.push_back({{"name", c.name}, {"index", optional_json(c.index)}});
    stages.push_back({{"stage", stage.number},
                      {"centers", centers},
                      {"plus_indices", stage.plus_indices},
                      {"minus_indices", stage.minus_indices}});
  }
  out["stages"] = stages;
  return out;
}

Json marked_class_json(const MarkedClass& cls) {
  Json members = Json::array();
  for (const auto& m : cls.members) members.push_back(m.to_string());
  return {{"canonical", cls.canonical.to_string()},
          {"members", members},
          {"u1_key", cls.u1_key},
          {"m", cls.m},
          {"l", cls.l},
          {"slack", optional_json(cls.slack)}};
}

Json catalog_class_json(const CatalogClass& cls) {
  Json members = Json::array();
  for (const auto& m : cls.members) members.push_back(m.to_string());
  return {{"canonical", cls.canonical.to_string()},
          {"members", members},
          {"u1_key", cls.u1_key},
          {"slack", optional_json(cls.slack)}};
}

Json delta_json(const DeltaTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"n", row.n},
                    {"delta", row.delta},
                    {"marked_classes", row.marked_classes},
                    {"ratio", row.ratio ? Json(to_string(*row.ratio)) : Json(nullptr)}});
  }
  return {{"rows", rows}};
}

std::string quadratic_latex(const QuadraticForm& q) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (auto it = q.terms.rbegin(); it != q.terms.rend(); ++it) {
    terms.emplace_back(it->second, z_monomial(it->first.first, it->first.second, true));
  }
  return format_sum(terms, true);
}

std::string quadratic_text(const QuadraticForm& q) {
  std::vector<std::pair<Rational, std::string>> terms;
  for (auto it = q.terms.rbegin(); it != q.terms.rend(); ++it) {
    terms.emplace_back(it->second, z_monomial(it->first.first, it->first.second, false));
  }
  return format_sum(terms, false);
}

std::string equation_latex(const MinitwistorModel& model) {
  return "z_" + latex_index(model.m + 1) + "z_" + latex_index(model.m + 2) + " = " + quadratic_latex(model.q);
}

std::string equation_text(const MinitwistorModel& model) {
  return "z_" + std::to_string(model.m + 1) + "*z_" + std::to_string(model.m + 2) + " = " +
         quadratic_text(model.q);
}

std::string binary_form_text(const BinaryForm& form, std::size_t n) {
  std::vector<std::pair<Rational, std::string>> terms;
  const std::size_t deg = form.degree();
  for (std::size_t d = form.coefficients.size(); d-- > 0;) {
    terms.emplace_back(form.coefficients[d], u_monomial(d, deg - d, n + 2, false));
  }
  return format_sum(terms, false);
}

std::string binary_form_latex(const BinaryForm& form, std::size_t n) {
  std::vector<std::pair<Rational, std::string>> terms;
  const std::size_t deg = form.degree();
  for (std::size_t d = form.coefficients.size(); d-- > 0;) {
    terms.emplace_back(form.coefficients[d], u_monomial(d, deg - d, n + 2, true));
  }
  return format_sum(terms, true);
}

std::string discriminant_latex(const DiscriminantReport& report) {
  std::ostringstream out;
  out << "\\begin{tabular}{lll}\n";
  out << "\\hline\n";
  out << "component & index & data \\\\\n";
  out << "\\hline\n";
  out << "(a) sections & -- & $\\Gamma$, $\\overline{\\Gamma}$ \\\\\n";
  for (const auto& chain : report.reducible_fiber_chains) {
    out << "(b) reducible fiber & $" << chain.index << "$ & chain of " << chain.length << " curves \\\\\n";
  }
  for (std::size_t i : report.irreducible_fibers) {
    out << "(c) irreducible fiber & $" << i << "$ & -- \\\\\n";
  }
  if (report.deformed) {
    out << "(d) hyperplane sections & $" << join(report.hyperplane_indices, ",") << "$ & "
        << report.hyperplane_sections << " curves \\\\\n";
  }
  out << "\\hline\n";
  out << "\\end{tabular}\n";
  return out.str();
}

std::string discriminant_text(const DiscriminantReport& report) {
  std::ostringstream out;
  out << "discriminant (" << (report.deformed ? "deformed" : "joyce") << ")\n";
  if (report.deformed) out << "  r, s: " << *report.r << ", " << *report.s << "\n";
  out << "  (a) sections: Gamma, conj(Gamma)\n";
  out << "  (b) reducible fibers:";
  if (report.reducible_fiber_chains.empty()) out << " none";
  for (const auto& chain : report.reducible_fiber_chains) out << " " << chain.index << "[" << chain.length << "]";
  out << "\n";
  out << "  (c) irreducible fibers: "
      << (report.irreducible_fibers.empty() ? "none" : join(report.irreducible_fibers, " ")) << "\n";
  if (report.deformed) {
    out << "  (d) hyperplane sections: " << report.hyperplane_sections;
    if (!report.hyperplane_indices.empty()) out << " (indices " << join(report.hyperplane_indices, " ") << ")";
    out << "\n";
  }
  out << "  non-reduced components possible: " << yes_no(report.non_reduced_possible) << "\n";
  out << "  effective remainder: " << report.effective_remainder << "\n";
  return out.str();
}

std::string schedule_text(const BlowUpSchedule& schedule) {
  std::ostringstream out;
  out << "blow-up schedule: " << schedule.stages.size() << " stage(s), M = " << schedule.max_l
      << ", m = " << schedule.m << "\n";
  for (const auto& stage : schedule.stages) {
    std::vector<std::string> names;
    for (const auto& c : stage.centers) names.push_back(c.name);
    out << "  stage " << stage.number << ": " << join(names, ", ") << "\n";
  }
  out << "  normal bundle of E_1: O(" << to_string(schedule.normal_bundle_first) << ", "
      << to_string(schedule.normal_bundle_second) << "), (C_1)^2 = " << to_string(schedule.self_intersection)
      << "\n";
  return out.str();
}

std::string schedule_latex(const BlowUpSchedule& schedule) {
  std::ostringstream out;
  out << "\\begin{tabular}{ll}\n\\hline\nstage & centers \\\\\n\\hline\n";
  for (const auto& stage : schedule.stages) {
    std::vector<std::string> names;
    for (const auto& c : stage.centers) names.push_back("$" + c.name + "$");
    out << stage.number << " & " << join(names, ", ") << " \\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n";
  out << "$N_{E_1} \\simeq \\nu^*\\mathcal{O}(" << to_string(schedule.normal_bundle_first) << ","
      << to_string(schedule.normal_bundle_second) << ")$\n";
  return out.str();
}

std::string invariants_text(const MarkedSequence& seq) {
  const ProcedureTrace trace = procedure_a(seq);
  const YDivisor y = build_y(trace);
  const LVector lvec = l_vector(y);
  const RegularityReport reg = regularity(seq);
  std::ostringstream out;
  out << "k: " << seq.to_string() << "\n";
  out << "n: " << seq.n() << "\n";
  out << "m: " << trace.m() << "\n";
  out << "trace: " << steps_text(trace) << "\n";
  out << "l+: " << join(y.plus) << "\n";
  out << "l-: " << join(y.minus) << "\n";
  out << "l: " << join(lvec.l) << "\n";
  if (reg.route == DeformationRoute::SemiFreeLeBrun) {
    out << "semi-free: handled by LeBrun theory\n";
  } else {
    out << "r: " << *reg.r << "\n";
    out << "s: " << *reg.s << "\n";
    out << "slack: " << *reg.slack << "\n";
  }
  out << "deformable: " << yes_no(reg.deformable) << "\n";
  return out.str();
}

std::string model_text(const MinitwistorModel& model) {
  std::ostringstream out;
  std::vector<std::string> lambdas;
  for (const auto& v : model.lambdas.values()) lambdas.push_back(v.to_string());
  out << "lambda: " << join(lambdas) << "\n";
  out << "c: " << (model.c_sign > 0 ? "+1" : "-1") << "\n";
  out << "rhs: " << binary_form_text(model.rhs, model.n) << "\n";
  out << "equation: " << equation_text(model) << "\n";
  out << "ambient: CP^" << model.ambient_dim << ", degree " << model.surface_degree << ", dim V_m = " << model.dim_vm
      << ", dim W_m = " << model.dim_wm << "\n";
  std::vector<std::string> sing;
  for (const auto& s : model.singular_points) {
    if (s.kind == SingularityRecord::Kind::CyclicQuotientPair) {
      sing.push_back(s.label() + " pair at P_inf");
    } else {
      sing.push_back(s.label() + " at lambda_" + std::to_string(*s.index) + "=" + s.lambda->to_string());
    }
  }
  out << "singularities: " << (sing.empty() ? "none" : join(sing, "; ")) << "\n";
  auto fibers = [](const std::vector<FiberPoint>& points) {
    std::vector<std::string> parts;
    for (const auto& p : points) parts.push_back(p.lambda.to_string());
    return parts.empty() ? std::string("none") : join(parts, " ");
  };
  out << "reducible fibers: " << fibers(model.reducible) << "\n";
  out << "irreducible marked fibers: " << fibers(model.irreducible) << "\n";
  out << "moduli dimension: " << (model.moduli_dim ? std::to_string(*model.moduli_dim) : "none") << "\n";
  out << "fixed lines: " << (model.fixed.empty() ? "none" : join(model.fixed, " ")) << "\n";
  return out.str();
}

}  // namespace mtf
