/*
   Copyright 2026 The symtensor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "evaluate.hpp"
#include "groebner.hpp"
#include "verify.hpp"

namespace symtensor {

enum class OutputFormat { json, csv, markdown, text };

inline OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "markdown" || s == "md") return OutputFormat::markdown;
  if (s == "text") return OutputFormat::text;
  throw ParseError("unknown output format '" + s + "'");
}

inline nlohmann::ordered_json to_json(const CatalogEntry& e) {
  nlohmann::ordered_json j;
  j["spec"] = e.spec;
  j["coefficients"] = e.coefficients.values;
  if (e.rational_form) {
    j["rational_form"] = {{"numerator", e.rational_form->numerator()},
                          {"denominator_weights", e.rational_form->denominator_weights()}};
  } else {
    j["rational_form"] = nullptr;
  }
  if (e.krull_dim) {
    j["krull_dim"] = *e.krull_dim;
  } else {
    j["krull_dim"] = nullptr;
  }
  j["provenance"] = e.provenance;
  j["flags"] = e.flags;
  return j;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

inline std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (const auto& f : flags) out += (out.empty() ? "" : " ") + f;
  return out;
}

inline std::string krull_text(const CatalogEntry& e) { return e.krull_dim ? std::to_string(*e.krull_dim) : ""; }

}  // namespace detail

/// One row per entry: c_0..c_D, krull, provenance. Entries are expected to
/// share the truncation degree D.
inline std::string render_table(std::span<const CatalogEntry> entries, OutputFormat format, int max_degree) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& e : entries) arr.push_back(to_json(e));
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << "spec";
      for (int d = 0; d <= max_degree; ++d) os << ",c" << d;
      os << ",krull,provenance\n";
      for (const auto& e : entries) {
        os << detail::csv_field(e.spec);
        for (auto v : e.coefficients.values) os << ',' << v;
        os << ',' << detail::krull_text(e) << ',' << detail::csv_field(e.provenance) << '\n';
      }
      break;
    case OutputFormat::markdown:
      os << "| spec |";
      for (int d = 0; d <= max_degree; ++d) os << " c" << d << " |";
      os << " krull | provenance |\n|---|";
      for (int d = 0; d <= max_degree; ++d) os << "---:|";
      os << "---:|---|\n";
      for (const auto& e : entries) {
        os << "| " << detail::md_cell(e.spec) << " |";
        for (auto v : e.coefficients.values) os << ' ' << v << " |";
        os << ' ' << detail::krull_text(e) << " | " << detail::md_cell(e.provenance) << " |\n";
      }
      break;
    case OutputFormat::text: {
      std::size_t width = 4;
      for (const auto& e : entries) width = std::max(width, e.spec.size());
      for (const auto& e : entries) {
        os << std::left << std::setw(static_cast<int>(width)) << e.spec << "  ";
        for (auto v : e.coefficients.values) os << v << ' ';
        os << " krull=" << (e.krull_dim ? std::to_string(*e.krull_dim) : "?") << '\n';
      }
      break;
    }
  }
  return os.str();
}

inline std::string render_entry(const CatalogEntry& e, OutputFormat format) {
  if (format == OutputFormat::json) return to_json(e).dump(2) + "\n";
  if (format != OutputFormat::text) return render_table(std::span(&e, 1), format, e.coefficients.truncation());
  std::ostringstream os;
  os << "spec:          " << e.spec << '\n' << "coefficients: ";
  for (auto v : e.coefficients.values) os << ' ' << v;
  os << '\n'
     << "rational form: " << (e.rational_form ? e.rational_form->to_string() : "none") << '\n'
     << "krull dim:     " << (e.krull_dim ? std::to_string(*e.krull_dim) : "unknown") << '\n'
     << "provenance:    " << e.provenance << '\n'
     << "flags:         " << detail::join_flags(e.flags) << '\n';
  return os.str();
}

/// Generators one per line, printed in lex term order so that the output
/// reads like hand-written polynomials and re-parses to the same set.
inline std::string render_ideal(const IdealPresentation& ideal) {
  std::ostringstream os;
  for (const auto& g : ideal.generators()) os << g.to_string(MonomialOrder::lex) << '\n';
  return os.str();
}

inline std::string render_check(const CheckResult& c) {
  std::ostringstream os;
  os << '[' << to_string(c.status) << "] " << c.id << ' ' << c.title << (c.stretch ? " (stretch)" : "") << " ("
     << std::fixed << std::setprecision(2) << c.seconds << " s)";
  if (!c.detail.empty()) os << ": " << c.detail;
  return os.str();
}

inline nlohmann::ordered_json to_json(const VerifyReport& r) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id},
                      {"title", c.title},
                      {"status", to_string(c.status)},
                      {"stretch", c.stretch},
                      {"detail", c.detail}});
  return {{"checks", checks}, {"exit_code", r.exit_code()}};
}

}  // namespace symtensor
