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

#include "mtf_cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "mtf/catalog.hpp"
#include "mtf/conic_bundle.hpp"
#include "mtf/error.hpp"
#include "mtf/invariants.hpp"
#include "mtf/minitwistor.hpp"
#include "mtf/report.hpp"
#include "mtf/toric_fan.hpp"
#include "mtf_cli/tables.hpp"

namespace mtf::cli {
namespace {

constexpr const char* kSemiFreeNotice = "semi-free: handled by LeBrun theory";

struct GlobalOptions {
  std::string format = "json";
  std::string lambda;
  std::string c = "+1";
  std::string cache_dir;
};

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "latex") return Format::Latex;
  if (text == "text") return Format::Text;
  throw InvalidInput("unknown format '" + text + "'");
}

int parse_c(const std::string& text) {
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw InvalidInput("--c must be +1 or -1, got '" + text + "'");
}

MarkedSequence parse_valid_sequence(const std::string& text) {
  MarkedSequence seq = MarkedSequence::parse(text);
  (void)fan_from_sequence(seq);
  return seq;
}

ConformalInvariant lambdas_for(const GlobalOptions& global, const MarkedSequence& seq) {
  if (global.lambda.empty()) return ConformalInvariant::standard(seq.n());
  return ConformalInvariant::parse(global.lambda);
}

CatalogOptions catalog_options(const GlobalOptions& global, const Environment& env, std::size_t workers) {
  CatalogOptions options;
  options.workers = std::max<std::size_t>(workers, 1);
  if (!global.cache_dir.empty()) {
    options.cache_dir = std::filesystem::path(global.cache_dir);
  } else if (env.cache_dir && !env.cache_dir->empty()) {
    options.cache_dir = std::filesystem::path(*env.cache_dir);
  }
  return options;
}

Json input_json(const MarkedSequence& seq, const ConformalInvariant& lambdas, int c) {
  Json values = Json::array();
  for (const auto& v : lambdas.values()) values.push_back(v.to_string());
  return {{"seq", seq.to_string()}, {"lambda", values}, {"c", c}};
}

std::string latex_equation_block(const MinitwistorModel& model) {
  return "\\begin{equation}\n" + equation_latex(model) + "\n\\end{equation}\n";
}

std::string cmd_analyze(const std::string& seq_text, const GlobalOptions& global) {
  const MarkedSequence seq = parse_valid_sequence(seq_text);
  const ConformalInvariant lambdas = lambdas_for(global, seq);
  const int c = parse_c(global.c);
  const MinitwistorModel model = build_minitwistor(seq, lambdas, c);
  const DiscriminantReport joyce = discriminant_joyce(seq);
  std::optional<DiscriminantReport> deformed;
  if (!seq.is_semi_free()) deformed = discriminant_deformed(seq);
  const BlowUpSchedule schedule = blow_up_schedule(seq);

  switch (parse_format(global.format)) {
    case Format::Json: {
      Json doc;
      doc["input"] = input_json(seq, lambdas, c);
      doc["invariants"] = invariants_json(seq);
      doc["model"] = model_json(model);
      doc["discriminant_joyce"] = discriminant_json(joyce);
      doc["discriminant_deformed"] = deformed ? discriminant_json(*deformed) : Json(nullptr);
      doc["schedule"] = schedule_json(schedule);
      doc["notice"] = seq.is_semi_free() ? Json(kSemiFreeNotice) : Json(nullptr);
      return dump(doc);
    }
    case Format::Latex: {
      std::string out = latex_equation_block(model);
      out += "\\[ Q(u) = " + binary_form_latex(model.rhs, model.n) + " \\]\n";
      out += discriminant_latex(joyce);
      if (deformed) out += discriminant_latex(*deformed);
      out += schedule_latex(schedule);
      return out;
    }
    case Format::Text: {
      std::string out = invariants_text(seq) + model_text(model) + discriminant_text(joyce);
      if (deformed) out += discriminant_text(*deformed);
      out += schedule_text(schedule);
      return out;
    }
  }
  return {};
}

std::string cmd_equation(const std::string& seq_text, const GlobalOptions& global) {
  const MarkedSequence seq = parse_valid_sequence(seq_text);
  const ConformalInvariant lambdas = lambdas_for(global, seq);
  const int c = parse_c(global.c);
  const MinitwistorModel model = build_minitwistor(seq, lambdas, c);
  switch (parse_format(global.format)) {
    case Format::Json: {
      Json doc;
      doc["input"] = input_json(seq, lambdas, c);
      doc["n"] = model.n;
      doc["m"] = model.m;
      doc["rhs"] = binary_form_json(model.rhs);
      doc["q"] = quadratic_json(model.q);
      doc["equation_latex"] = equation_latex(model);
      doc["equation_text"] = equation_text(model);
      return dump(doc);
    }
    case Format::Latex:
      return latex_equation_block(model);
    case Format::Text:
      return equation_text(model) + "\n";
  }
  return {};
}

std::string cmd_deform_check(const std::string& seq_text, const GlobalOptions& global) {
  const MarkedSequence seq = parse_valid_sequence(seq_text);
  const RegularityReport reg = regularity(seq);
  std::optional<DiscriminantReport> deformed;
  if (!seq.is_semi_free()) deformed = discriminant_deformed(seq);
  switch (parse_format(global.format)) {
    case Format::Json: {
      Json doc = regularity_json(reg);
      doc["k"] = seq.to_string();
      doc["n"] = seq.n();
      doc["discriminant_deformed"] = deformed ? discriminant_json(*deformed) : Json(nullptr);
      doc["notice"] = deformed ? Json(nullptr) : Json(kSemiFreeNotice);
      return dump(doc);
    }
    case Format::Latex: {
      if (!deformed) return std::string("\\text{") + kSemiFreeNotice + "}\n";
      std::ostringstream out;
      out << "$r = " << *reg.r << "$, $s = " << *reg.s << "$, $n+r-s = " << *reg.slack << "$ ("
          << (reg.deformable ? "deformable" : "not deformable") << ")\n";
      out << discriminant_latex(*deformed);
      return out.str();
    }
    case Format::Text: {
      if (!deformed) return std::string(kSemiFreeNotice) + "\n";
      std::ostringstream out;
      out << "k: " << seq.to_string() << "\n";
      out << "r: " << *reg.r << "\ns: " << *reg.s << "\nslack: " << *reg.slack << "\n";
      out << "deformable: " << (reg.deformable ? "yes" : "no") << "\n";
      out << discriminant_text(*deformed);
      return out.str();
    }
  }
  return {};
}

std::string cmd_schedule(const std::string& seq_text, const GlobalOptions& global) {
  const MarkedSequence seq = parse_valid_sequence(seq_text);
  const BlowUpSchedule schedule = blow_up_schedule(seq);
  switch (parse_format(global.format)) {
    case Format::Json: {
      Json doc = schedule_json(schedule);
      doc["k"] = seq.to_string();
      return dump(doc);
    }
    case Format::Latex:
      return schedule_latex(schedule);
    case Format::Text:
      return schedule_text(schedule);
  }
  return {};
}

std::string cmd_catalog(std::size_t n, const std::string& kind, const CatalogOptions& options,
                        const GlobalOptions& global) {
  const Format format = parse_format(global.format);
  std::vector<std::vector<std::string>> rows;
  Json doc;
  doc["n"] = n;
  doc["kind"] = kind;
  if (kind == "marked") {
    const auto classes = marked_classes(n, options);
    Json arr = Json::array();
    for (const auto& cls : classes) {
      arr.push_back(marked_class_json(cls));
      std::string l;
      for (std::size_t i = 0; i < cls.l.size(); ++i) l += (i ? "," : "") + std::to_string(cls.l[i]);
      rows.push_back({cls.canonical.to_string(), std::to_string(cls.m), l,
                      cls.slack ? std::to_string(*cls.slack) : "-", cls.u1_key.empty() ? "[]" : cls.u1_key});
    }
    doc["count"] = classes.size();
    doc["classes"] = arr;
  } else if (kind == "u1") {
    const U1Catalog catalog = u1_classes(n, options);
    Json arr = Json::array();
    for (const auto& cls : catalog.classes) {
      arr.push_back(catalog_class_json(cls));
      rows.push_back({cls.canonical.to_string(), std::to_string(cls.members.size()),
                      cls.slack ? std::to_string(*cls.slack) : "-", cls.u1_key.empty() ? "[]" : cls.u1_key});
    }
    doc["delta"] = catalog.delta();
    doc["count"] = catalog.delta();
    doc["classes"] = arr;
  } else {
    throw InvalidInput("--classes must be 'marked' or 'u1', got '" + kind + "'");
  }

  std::ostringstream out;
  switch (format) {
    case Format::Json:
      return dump(doc);
    case Format::Text:
      out << "n = " << n << ", " << rows.size() << " " << kind << " classes\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "  " : "") << row[i];
        out << "\n";
      }
      return out.str();
    case Format::Latex: {
      const bool marked = kind == "marked";
      out << "\\begin{tabular}{" << (marked ? "lllll" : "llll") << "}\\hline\n";
      out << (marked ? "k & m & l & slack & key" : "k & members & slack & key") << "\\\\\n\\hline\n";
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " & " : "") << "$" << row[i] << "$";
        out << "\\\\\n";
      }
      out << "\\hline\n\\end{tabular}\n";
      return out.str();
    }
  }
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
  CLI::App app{"Invariants and minitwistor models of torus actions on connected sums of CP^2", "mtf"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "latex", "text"}))
      ->capture_default_str();
  app.add_option("--lambda", global.lambda, "Conformal invariant: n+2 comma-separated values, 0,...,inf");
  app.add_option("--c", global.c, "Sign of the constant in the equation (+1 or -1)")->capture_default_str();
  app.add_option("--cache-dir", global.cache_dir, "Directory for catalog caches (overrides MTF_CACHE_DIR)");

  std::string seq_text;
  auto* analyze = app.add_subcommand("analyze", "Full report for a marked sequence");
  analyze->add_option("--seq", seq_text, "Sequence k_2,...,k_{n+2}")->required();
  auto* equation = app.add_subcommand("equation", "Defining equation of the minitwistor space");
  equation->add_option("--seq", seq_text, "Sequence k_2,...,k_{n+2}")->required();
  auto* deform = app.add_subcommand("deform-check", "Deformability criterion and deformed discriminant");
  deform->add_option("--seq", seq_text, "Sequence k_2,...,k_{n+2}")->required();
  auto* schedule = app.add_subcommand("schedule", "Blow-up schedule");
  schedule->add_option("--seq", seq_text, "Sequence k_2,...,k_{n+2}")->required();

  std::size_t catalog_n = 0;
  std::string classes = "marked";
  std::size_t workers = 1;
  auto* catalog = app.add_subcommand("catalog", "Enumerate marked actions or U(1)-classes");
  catalog->add_option("--n", catalog_n, "Number of CP^2 summands")->required();
  catalog->add_option("--classes", classes, "marked or u1")
      ->check(CLI::IsMember({"marked", "u1"}))
      ->capture_default_str();
  catalog->add_option("--workers", workers, "Worker threads for enumeration")->capture_default_str();

  std::string which;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> n_single;
  auto* tables = app.add_subcommand("tables", "Regenerate reference tables and compare");
  tables->add_option("which", which, "delta, fibonacci, lebrun or involutive")
      ->required()
      ->check(CLI::IsMember({"delta", "fibonacci", "lebrun", "involutive"}));
  tables->add_option("--n-max", n_max, "Largest n (delta, fibonacci)");
  tables->add_option("--n", n_single, "n (lebrun, involutive)");
  tables->add_option("--workers", workers, "Worker threads for enumeration")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    std::string body;
    int code = kExitOk;
    if (analyze->parsed()) {
      body = cmd_analyze(seq_text, global);
    } else if (equation->parsed()) {
      body = cmd_equation(seq_text, global);
    } else if (deform->parsed()) {
      body = cmd_deform_check(seq_text, global);
    } else if (schedule->parsed()) {
      body = cmd_schedule(seq_text, global);
    } else if (catalog->parsed()) {
      body = cmd_catalog(catalog_n, classes, catalog_options(global, env, workers), global);
    } else if (tables->parsed()) {
      const Format format = parse_format(global.format);
      TableResult result;
      if (which == "delta") {
        result = delta_table(n_max.value_or(5), format, catalog_options(global, env, workers));
      } else if (which == "fibonacci") {
        result = fibonacci_table(n_max.value_or(7), format);
      } else if (which == "lebrun") {
        result = lebrun_table(n_single.value_or(4), format);
      } else {
        result = involutive_table(n_single.value_or(7), format);
      }
      body = result.body;
      for (const auto& mismatch : result.mismatches) err << "golden mismatch: " << mismatch << "\n";
      if (!result.mismatches.empty()) code = kExitInvariantViolation;
    }
    out << body;
    return code;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariantViolation;
  }
}

}  // namespace mtf::cli
