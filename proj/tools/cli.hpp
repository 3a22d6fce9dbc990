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

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include <symtensor/errors.hpp>
#include <symtensor/evaluate.hpp>
#include <symtensor/render.hpp>
#include <symtensor/verify.hpp>

namespace symtensor::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kLimit = 3, kIntegrity = 4 };

struct RunConfig {
  int max_degree = 8;
  double timeout_seconds = 300;
  int gb_max_degree = 12;
  std::string format;
  bool force = false;

  GroebnerLimits limits() const {
    return {gb_max_degree, std::chrono::duration<double>(timeout_seconds)};
  }
  EvalOptions eval_options() const { return {max_degree, limits(), force}; }
};

namespace detail {

inline void add_common_options(CLI::App* cmd, RunConfig& cfg, const std::string& default_format) {
  cfg.format = default_format;
  cmd->add_option("--max-degree", cfg.max_degree, "truncation degree D")->check(CLI::NonNegativeNumber);
  cmd->add_option("--timeout", cfg.timeout_seconds, "Groebner timeout in seconds")->check(CLI::PositiveNumber);
  cmd->add_option("--gb-max-degree", cfg.gb_max_degree, "Groebner degree limit")->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "json, csv, markdown or text")
      ->check(CLI::IsMember({"json", "csv", "markdown", "md", "text"}));
  cmd->add_flag("--force", cfg.force, "lift the parameter caps of the Groebner-routed families");
}

inline void print_limit(std::ostream& err, const LimitExceeded& e) {
  const auto& d = e.diagnostics;
  err << "limit exceeded: " << e.what() << "\n"
      << "  pairs processed:    " << d.pairs_processed << "\n"
      << "  pairs pending:      " << d.pairs_pending << "\n"
      << "  zero reductions:    " << d.zero_reductions << "\n"
      << "  max degree reached: " << d.max_degree_reached << "\n"
      << "  basis size:         " << d.basis_size << "\n"
      << "  elapsed seconds:    " << d.elapsed_seconds << "\n";
}

}  // namespace detail

/// Runs body and maps the library's exceptions onto exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const LimitExceeded& e) {
    detail::print_limit(err, e);
    return kLimit;
  } catch (const IntegrityError& e) {
    err << "integrity error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const ValidityError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kIntegrity;
  }
}

/// Runs the command line `symtensor <args...>` (args excludes the program
/// name) and returns the process exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetric tensor algebras: graded dimensions, Hilbert series and Krull dimensions"};
  app.name("symtensor");
  app.require_subcommand(1);

  RunConfig series_cfg, table_cfg, verify_cfg, dump_cfg;
  std::string series_spec, dump_spec;
  std::vector<std::string> table_specs;

  auto* series = app.add_subcommand("series", "graded dimensions and Hilbert series of one variety");
  series->add_option("spec", series_spec, "variety spec, e.g. Q(3) or Klein(BD,2)")->required();
  detail::add_common_options(series, series_cfg, "text");

  auto* dump = app.add_subcommand("ideal-dump", "generators of a Groebner-routed presentation, one per line");
  dump->add_option("spec", dump_spec, "variety spec, e.g. Gr(1,2) or Q(1)")->required();
  dump->add_flag("--force", dump_cfg.force, "lift the parameter caps");

  auto* table = app.add_subcommand("table", "one row of dimensions per variety");
  table->add_option("specs", table_specs, "variety specs");
  detail::add_common_options(table, table_cfg, "markdown");

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  detail::add_common_options(verify, verify_cfg, "text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  return guarded(err, [&]() -> int {
    if (series->parsed()) {
      const CatalogEntry e = evaluate(series_spec, series_cfg.eval_options());
      out << render_entry(e, parse_output_format(series_cfg.format));
    } else if (dump->parsed()) {
      out << render_ideal(presentation_of(parse_variety_spec(dump_spec), dump_cfg.force));
    } else if (table->parsed()) {
      if (table_specs.empty()) {
        err << "table: at least one spec is required\n";
        return kUsage;
      }
      std::vector<CatalogEntry> rows;
      for (const auto& s : table_specs) rows.push_back(evaluate(s, table_cfg.eval_options()));
      out << render_table(rows, parse_output_format(table_cfg.format), table_cfg.max_degree);
    } else if (verify->parsed()) {
      const auto format = parse_output_format(verify_cfg.format);
      const bool streaming = format != OutputFormat::json;
      const VerifyReport report = run_verification({verify_cfg.max_degree, verify_cfg.limits()}, [&](const CheckResult& c) {
        if (streaming) out << render_check(c) << std::endl;
      });
      const int code = report.exit_code();
      if (streaming) {
        out << (code == kOk ? "all checks passed" : code == kLimit ? "some checks skipped by limit" : "verification failed")
            << '\n';
      } else {
        out << to_json(report).dump(2) << '\n';
      }
      return code;
    }
    return kOk;
  });
}

}  // namespace symtensor::cli
