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

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"
#include "evaluate.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "invariants.hpp"

namespace symtensor {

struct VerifyConfig {
  int max_degree = 8;
  GroebnerLimits limits;
};

struct CheckResult {
  enum class Status { pass, fail, skipped_by_limit };

  std::string id;
  std::string title;
  Status status = Status::pass;
  bool stretch = false;
  std::string detail;
  double seconds = 0;
};

inline std::string to_string(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::pass:
      return "PASS";
    case CheckResult::Status::fail:
      return "FAIL";
    case CheckResult::Status::skipped_by_limit:
      return "SKIPPED-BY-LIMIT";
  }
  return "?";
}

struct VerifyReport {
  std::vector<CheckResult> checks;

  /// 1 on any failure; else 3 when a mandatory check hit a limit; else 0.
  int exit_code() const {
    bool limited = false;
    for (const auto& c : checks) {
      if (c.status == CheckResult::Status::fail) return 1;
      if (c.status == CheckResult::Status::skipped_by_limit && !c.stretch) limited = true;
    }
    return limited ? 3 : 0;
  }
};

/// Number of degree-d monomials in nvars variables divisible by no generator,
/// by enumeration.
inline std::int64_t count_standard_monomials(const MonomialIdeal& ideal, std::size_t nvars, int degree) {
  if (nvars == 0) throw std::invalid_argument("count_standard_monomials: no variables");
  std::vector<int> exps(nvars, 0);
  std::int64_t count = 0;
  auto rec = [&](auto&& self, std::size_t var, int left) -> void {
    if (var + 1 == nvars) {
      exps[var] = left;
      if (!ideal.contains(Monomial(exps))) ++count;
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[var] = e;
      self(self, var + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  return count;
}

/// Seeded random monomial ideal: up to 5 variables, up to 6 generators of
/// degree 1..4.
inline std::pair<std::size_t, MonomialIdeal> random_monomial_ideal(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(1, 5), ng(1, 6), dg(1, 4);
  const auto nvars = static_cast<std::size_t>(nv(rng));
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  std::vector<Monomial> gens;
  const int count = ng(rng);
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(nvars, 0);
    const int deg = dg(rng);
    for (int i = 0; i < deg; ++i) ++e[pick(rng)];
    gens.emplace_back(e);
  }
  return {nvars, MonomialIdeal(nvars, std::move(gens))};
}

namespace detail {

class Verifier {
 public:
  Verifier(VerifyConfig cfg, std::function<void(const CheckResult&)> sink) : cfg_(std::move(cfg)), sink_(std::move(sink)) {}

  VerifyReport run() {
    check("1", "projective space: Groebner route equals closed form", false, [&](std::ostream& os) {
      const int d2 = cfg_.max_degree, d3 = std::min(cfg_.max_degree, 6);
      const auto a = gb_dims("Gr(1,2)", d2), b = gb_dims("Gr(1,3)", d3);
      os << "Gr(1,2) through " << d2 << ", Gr(1,3) through " << d3;
      return a == projective_space_dims(1, d2) && b == projective_space_dims(2, d3);
    });
    check("2", "quadric coincidences Q(1) = P^1, Q(2) = P^1 x P^1", false, [&](std::ostream& os) {
      const int D = cfg_.max_degree;
      const auto q1 = gb_dims("Q(1)", D), q2 = gb_dims("Q(2)", D);
      GradedDims odd;
      for (int d = 0; d <= D; ++d) odd.values.push_back(2 * d + 1);
      const GradedDims p1 = projective_space_dims(1, D);
      const std::vector<std::int64_t> head{1, 6, 19, 44};
      bool ok = q1 == odd && q2 == convolve(p1, p1);
      for (std::size_t i = 0; i < head.size() && i < q2.size(); ++i) ok = ok && q2.values[i] == head[i];
      os << "Q(2) degrees 0-3:";
      for (std::size_t i = 0; i < 4 && i < q2.size(); ++i) os << ' ' << q2.values[i];
      return ok;
    });
    check("3a", "homogeneous bigness: krull = 2 dim X for Q(1), Q(2), Q(3)", false, [&](std::ostream& os) {
      bool ok = true;
      for (int n = 1; n <= 3; ++n) {
        const auto& e = entry("Q(" + std::to_string(n) + ")");
        os << "Q(" << n << ") krull " << e.krull_dim.value_or(-1) << "; ";
        ok = ok && e.krull_dim == 2 * n;
      }
      return ok;
    });
    check("3b", "homogeneous bigness: krull = 8 for Gr(2,4)", true, [&](std::ostream& os) {
      const auto& e = entry("Gr(2,4)");
      os << "krull " << e.krull_dim.value_or(-1) << ", basis size " << e.basis->size();
      return e.krull_dim == 8;
    });
    check("4", "Hitchin bridge: fixed-determinant rank 2 genus 2 equals 2Q(3)", false, [&](std::ostream& os) {
      const auto h = hitchin_series(2, 2, 1, true);
      os << h.to_string();
      return series_eq(h, two_quadrics_series(3));
    });
    check("5", "Klein/Molien: binary polyhedral invariant series", false, [&](std::ostream& os) { return klein(os); });
    check("6", "monomial ideals: series expansion equals brute-force count", false, [&](std::ostream& os) {
      std::mt19937_64 rng(20260101);
      const int D = cfg_.max_degree;
      for (int trial = 0; trial < 20; ++trial) {
        const auto [nvars, ideal] = random_monomial_ideal(rng);
        const GradedDims got = expand(series_from_monomial_ideal(ideal), D);
        for (int d = 0; d <= D; ++d)
          if (got.values[static_cast<std::size_t>(d)] != count_standard_monomials(ideal, nvars, d)) {
            os << "ideal " << trial << " differs at degree " << d;
            return false;
          }
      }
      os << "20 ideals through degree " << D;
      return true;
    });
    check("7", "Groebner contract on the ideals of checks 1-3", false, [&](std::ostream& os) {
      if (entries_.empty()) throw LimitExceeded("no Groebner basis from checks 1-3 is available", {});
      for (const auto& [name, e] : entries_) {
        if (!e.basis) continue;
        if (!satisfies_buchberger_criterion(*e.basis) || !is_reduced(*e.basis)) {
          os << name << ": basis fails the S-pair criterion or is not reduced";
          return false;
        }
        for (const auto& g : e.presentation->generators())
          if (!normal_form(g, e.basis->elements(), e.basis->order()).is_zero()) {
            os << name << ": input generator with nonzero normal form";
            return false;
          }
      }
      os << entries_.size() << " bases";
      return true;
    });
    check("8", "dimension bounds: krull <= 2 dim X everywhere, Liu bound tight for Ab(1..3)", false,
          [&](std::ostream& os) {
            for (const char* s : {"Pn(1)", "Pn(2)", "Pn(3)", "2Q(1)", "2Q(3)", "Hitchin(g=2,r=2,d=1,fixed)",
                                  "Hitchin(g=3,r=1,d=1)", "ParHitchin(g=4,r=2,s=1,mode=literal)",
                                  "ParHitchin(g=4,r=2,s=1,mode=symmetric)", "Klein(BD,2)", "Prod(Pn(1),Ab(1))",
                                  "Trivial(general_type)"})
              evaluate(s, options());  // IntegrityError on a violated bound
            for (int n = 1; n <= 3; ++n) {
              const auto e = evaluate("Ab(" + std::to_string(n) + ")", options());
              if (!e.bounds || !e.bounds->liu_tight || e.krull_dim != n) {
                os << "Ab(" << n << ") not tight";
                return false;
              }
            }
            os << "all checked entries within bounds";
            return true;
          });
    check("9", "integrity: no negative coefficients, integral Molien averages", false, [&](std::ostream& os) {
      os << integrity_failures_ << " integrity error(s) across the suite";
      return integrity_failures_ == 0;
    });
    return std::move(report_);
  }

 private:
  EvalOptions options() const { return {cfg_.max_degree, cfg_.limits, false}; }

  const CatalogEntry& entry(const std::string& spec) {
    auto it = entries_.find(spec);
    if (it == entries_.end()) it = entries_.emplace(spec, evaluate(spec, options())).first;
    return it->second;
  }

  GradedDims gb_dims(const std::string& spec, int D) { return expand(*entry(spec).rational_form, D); }

  bool klein(std::ostream& os) {
    struct Case {
      GroupLabel label;
      std::optional<int> n;
      int window;
    };
    const Case cases[] = {{GroupLabel::binary_dihedral, 2, 40},
                          {GroupLabel::binary_dihedral, 3, 40},
                          {GroupLabel::binary_tetrahedral, std::nullopt, default_molien_window(GroupLabel::binary_tetrahedral)},
                          {GroupLabel::binary_octahedral, std::nullopt, default_molien_window(GroupLabel::binary_octahedral)},
                          {GroupLabel::binary_icosahedral, std::nullopt, 124}};
    bool ok = true;
    for (const auto& c : cases) {
      const KleinTableRow row = klein_table_row(c.label, c.n);
      const KleinComparison cmp = ruled_klein_series(row, c.window);
      const auto& dims = cmp.computed.dims;
      os << label_name(c.label, c.n) << ": ";
      bool odd_zero = true;
      for (std::size_t p = 1; p < dims.size(); p += 2) odd_zero = odd_zero && dims.values[p] == 0;
      if (!odd_zero || dims.values[0] != 1) ok = false;
      if (!cmp.computed.matched) {
        os << "no hypersurface form; ";
        ok = false;
        continue;
      }
      const auto& h = *cmp.computed.matched;
      os << "(" << h.generators[0] << "," << h.generators[1] << "," << h.generators[2] << ";" << h.relation << ")";
      const bool rotation_rows_checked = c.label == GroupLabel::binary_dihedral || c.label == GroupLabel::binary_icosahedral;
      if (rotation_rows_checked) {
        // the table series must agree with every computed coefficient
        const bool same = cmp.table && expand(*cmp.table, c.window) == dims;
        os << (same ? " matches " : " differs from ") << row.rotation_group << " row; ";
        ok = ok && same;
      } else if (!cmp.table) {
        os << " vs " << row.rotation_group << " row: row-inconsistent (not weighted homogeneous); ";
      } else {
        os << " vs " << row.rotation_group << " row: " << (cmp.match.value_or(false) ? "match" : "mismatch") << "; ";
      }
    }
    return ok;
  }

  template <class F>
  void check(std::string id, std::string title, bool stretch, F&& body) {
    CheckResult r{std::move(id), std::move(title), CheckResult::Status::pass, stretch, {}, 0};
    std::ostringstream os;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.status = body(os) ? CheckResult::Status::pass : CheckResult::Status::fail;
      r.detail = os.str();
    } catch (const LimitExceeded& e) {
      r.status = CheckResult::Status::skipped_by_limit;
      r.detail = std::string(e.what()) + " after " + std::to_string(e.diagnostics.pairs_processed) + " pairs";
    } catch (const IntegrityError& e) {
      ++integrity_failures_;
      r.status = CheckResult::Status::fail;
      r.detail = std::string("integrity error: ") + e.what();
    } catch (const std::exception& e) {
      r.status = CheckResult::Status::fail;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (sink_) sink_(r);
    report_.checks.push_back(std::move(r));
  }

  VerifyConfig cfg_;
  std::function<void(const CheckResult&)> sink_;
  std::map<std::string, CatalogEntry> entries_;
  VerifyReport report_;
  int integrity_failures_ = 0;
};

}  // namespace detail

/// Runs the full verification suite; sink, when given, sees each result as
/// soon as it is available.
inline VerifyReport run_verification(const VerifyConfig& cfg = {},
                                     std::function<void(const CheckResult&)> sink = nullptr) {
  return detail::Verifier(cfg, std::move(sink)).run();
}

}  // namespace symtensor
