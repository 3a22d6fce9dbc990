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

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "invariants.hpp"
#include "spec_grammar.hpp"

namespace symtensor {

struct EvalOptions {
  int max_degree = 8;
  GroebnerLimits limits;
  bool force = false;  // lift the Groebner parameter caps
};

/// Everything computed for one variety spec.
struct CatalogEntry {
  std::string spec;
  GradedDims coefficients;
  std::optional<HilbertSeries> rational_form;
  std::optional<int> krull_dim;
  std::string provenance;
  std::vector<std::string> flags;
  std::optional<BoundsReport> bounds;
  // Groebner-routed families only.
  std::shared_ptr<const IdealPresentation> presentation;
  std::shared_ptr<const GroebnerBasis> basis;
  // Klein entries only.
  std::optional<KleinComparison> klein;
};

/// Ideal presentation of a Groebner-routed spec; ValidityError for families
/// with a closed form.
inline IdealPresentation presentation_of(const VarietySpec& spec, bool force = false) {
  if (const auto* g = std::get_if<Grassmannian>(&spec.value)) {
    if (!force && g->n > kGrassmannianCap)
      throw CapExceeded("Gr(r,n) with n > " + std::to_string(kGrassmannianCap) + " needs the cap override");
    return grassmannian_ideal(g->r, g->n);
  }
  if (const auto* q = std::get_if<Quadric>(&spec.value)) {
    if (!force && q->n > kQuadricCap)
      throw CapExceeded("Q(n) with n > " + std::to_string(kQuadricCap) + " needs the cap override");
    return quadric_ideal(q->n);
  }
  throw ValidityError(to_string(spec) + " has a closed form and no ideal presentation");
}

namespace detail {

inline void add_flag(std::vector<std::string>& flags, std::string f) {
  if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.push_back(std::move(f));
}

inline std::string hypersurface_flag(const std::optional<HypersurfaceDegrees>& h) {
  if (!h) return "hypersurface-form:none";
  return "hypersurface-form:(" + std::to_string(h->generators[0]) + "," + std::to_string(h->generators[1]) + "," +
         std::to_string(h->generators[2]) + ";" + std::to_string(h->relation) + ")";
}

inline CatalogEntry evaluate_klein(const RuledKlein& k, const EvalOptions& opt) {
  CatalogEntry e;
  const KleinTableRow row = klein_table_row(k.group, k.n);
  e.klein = ruled_klein_series(row, std::max(opt.max_degree, default_molien_window(k.group)));
  e.coefficients = e.klein->computed.dims.truncated(opt.max_degree);
  e.rational_form = e.klein->computed.rational_form;
  e.provenance = "ruled surface over a curve, invariants of " + label_name(k.group, k.n) +
                 " in Sym(V) via Molien averaging; compared with the " + row.rotation_group + " row of Klein's table";
  add_flag(e.flags, hypersurface_flag(e.klein->computed.matched));
  if (!row.relation_degree) {
    add_flag(e.flags, "klein-table:row-inconsistent");
  } else if (e.klein->match) {
    add_flag(e.flags, *e.klein->match ? "klein-table:match" : "klein-table:mismatch");
  } else {
    add_flag(e.flags, "klein-table:unresolved");
  }
  return e;
}

}  // namespace detail

/// Computes the entry for a spec. Throws LimitExceeded, IntegrityError,
/// CapExceeded or ValidityError.
inline CatalogEntry evaluate(const VarietySpec& spec, const EvalOptions& opt = {}) {
  if (opt.max_degree < 0) throw std::invalid_argument("negative truncation degree");
  CatalogEntry e;
  const int D = opt.max_degree;
  std::visit(
      detail::overloaded{
          [&](const Abelian& v) {
            e.rational_form = abelian_series(v.n);
            e.provenance = "abelian variety: trivial tangent bundle, polynomial algebra on n degree-1 generators";
          },
          [&](const ProjectiveSpace& v) {
            e.rational_form = projective_space_series(v.n);
            e.provenance =
                "projective space P(V): (+)_d S^d V (x) S^d V* modulo the ideal of the identity in V (x) V*";
          },
          [&](const Grassmannian& v) {
            e.presentation = std::make_shared<const IdealPresentation>(presentation_of(spec, opt.force));
            e.provenance = e.presentation->provenance();
            if (v.r != 1 && v.n - v.r != 1) detail::add_flag(e.flags, "radicality-assumed");
          },
          [&](const Quadric&) {
            e.presentation = std::make_shared<const IdealPresentation>(presentation_of(spec, opt.force));
            e.provenance = e.presentation->provenance();
          },
          [&](const TwoQuadrics& v) {
            e.rational_form = two_quadrics_series(v.n);
            e.provenance = "smooth intersection of two quadrics in P^" + std::to_string(v.n + 2) +
                           ": polynomial algebra on n degree-2 generators";
          },
          [&](const Hitchin& v) {
            e.rational_form = hitchin_series(v.g, v.r, v.d, v.fixed_det);
            e.provenance = std::string("Hitchin moduli") + (v.fixed_det ? " with fixed determinant" : "") +
                           ": polynomial algebra on the Hitchin base, h^0(K^i) generators in degree i";
          },
          [&](const ParabolicHitchin& v) {
            const auto res = parabolic_hitchin_series(v.g, v.r, v.s, v.mode);
            e.rational_form = res.series;
            const bool literal = v.mode == ParabolicMode::literal;
            e.provenance = std::string("parabolic Hitchin moduli: polynomial algebra on the base, block i from ") +
                           (literal ? "H^0(K((i-1)D))" : "H^0(K^i((i-1)D))");
            detail::add_flag(e.flags, literal ? "mode=literal" : "mode=symmetric");
            detail::add_flag(e.flags, res.valid ? "codim2-valid" : "codim2-invalid");
          },
          [&](const RuledKlein& v) { e = detail::evaluate_klein(v, opt); },
          [&](const Product& v) {
            const CatalogEntry a = evaluate(*v.left, opt), b = evaluate(*v.right, opt);
            if (a.rational_form && b.rational_form) e.rational_form = series_product(*a.rational_form, *b.rational_form);
            e.coefficients = convolve(a.coefficients, b.coefficients);
            e.provenance = "product (Kuenneth): [" + a.provenance + "] x [" + b.provenance + "]";
            for (const auto* side : {&a, &b})
              for (const auto& f : side->flags)
                if (f != "tangent-big" && f != "liu-bound-tight") detail::add_flag(e.flags, f);
          },
          [&](const Trivial& v) {
            const TrivialEntry t = triviality_registry(v);
            e.rational_form = t.series;
            e.provenance = t.reason;
            detail::add_flag(e.flags, "trivial");
          },
      },
      spec.value);

  e.spec = to_string(spec);
  if (e.presentation) {
    e.basis = std::make_shared<const GroebnerBasis>(buchberger(*e.presentation, MonomialOrder::degrevlex, opt.limits));
    e.rational_form = series_from_monomial_ideal(leading_term_ideal(*e.basis));
  }
  if (e.rational_form) {
    e.coefficients = expand(*e.rational_form, D);
    e.bounds = check_dimension_bounds(spec, *e.rational_form);
    e.krull_dim = e.bounds->krull_dim;
    if (e.bounds->tangent_big) detail::add_flag(e.flags, "tangent-big");
    if (e.bounds->liu_tight) detail::add_flag(e.flags, "liu-bound-tight");
  }
  if (e.coefficients.values.empty() || e.coefficients.values[0] != 1)
    throw IntegrityError(e.spec + ": degree-0 coefficient is not 1");
  return e;
}

inline CatalogEntry evaluate(std::string_view spec_text, const EvalOptions& opt = {}) {
  return evaluate(parse_variety_spec(spec_text), opt);
}

}  // namespace symtensor
