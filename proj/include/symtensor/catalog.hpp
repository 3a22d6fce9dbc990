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

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "groebner.hpp"
#include "hilbert.hpp"
#include "invariants.hpp"
#include "poly.hpp"

namespace symtensor {

// ---------------------------------------------------------------------------
// Variety descriptions

struct Abelian {
  int n;
};
struct ProjectiveSpace {
  int n;
};
struct Grassmannian {
  int r, n;
};
struct Quadric {
  int n;
};
struct TwoQuadrics {
  int n;
};
struct Hitchin {
  int g, r, d;
  bool fixed_det;
};

/// Which line bundle the i-th block of the parabolic Hitchin base uses:
/// K_C((i-1)D) as displayed, or K_C^i((i-1)D).
enum class ParabolicMode { literal, symmetric_power };

struct ParabolicHitchin {
  int g, r, s;
  ParabolicMode mode;
};
struct RuledKlein {
  GroupLabel group;
  std::optional<int> n;
};

enum class TrivialReason { c1_zero_finite_pi1, general_type, hypersurface, ruled_general_bundle };

struct Trivial {
  TrivialReason reason;
  std::optional<int> degree;     // hypersurface only
  std::optional<int> dimension;  // hypersurface only
};

struct VarietySpec;

struct Product {
  std::shared_ptr<const VarietySpec> left, right;
};

struct VarietySpec {
  std::variant<Abelian, ProjectiveSpace, Grassmannian, Quadric, TwoQuadrics, Hitchin, ParabolicHitchin, RuledKlein,
               Product, Trivial>
      value;
};

/// Kodaira dimension metadata.
struct Kodaira {
  enum class Kind { unknown, minus_infinity, finite };
  Kind kind = Kind::unknown;
  int value = 0;

  static Kodaira unknown() { return {}; }
  static Kodaira minus_infinity() { return {Kind::minus_infinity, 0}; }
  static Kodaira finite(int v) { return {Kind::finite, v}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::unknown:
        return "unknown";
      case Kind::minus_infinity:
        return "-inf";
      case Kind::finite:
        return std::to_string(value);
    }
    return "unknown";
  }
};

/// Parameter caps for the Groebner-routed families; exceeding them needs an
/// explicit override.
class CapExceeded : public ValidityError {
 public:
  using ValidityError::ValidityError;
};

inline constexpr int kGrassmannianCap = 4;
inline constexpr int kQuadricCap = 3;

// ---------------------------------------------------------------------------
// Closed forms

namespace detail {

inline std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("dimension exceeds 64-bit range");
  return z.get_si();
}

inline mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace detail

/// c_d = C(n+d, n)^2 - C(n+d-1, n)^2 for the cotangent algebra of P^n.
inline GradedDims projective_space_dims(int n, int max_degree) {
  if (n < 1) throw ValidityError("projective space needs n >= 1");
  if (max_degree < 0) throw std::invalid_argument("negative truncation degree");
  GradedDims dims;
  for (int d = 0; d <= max_degree; ++d) {
    const mpz_class a = detail::binom(n + d, n), b = detail::binom(n + d - 1, n);
    dims.values.push_back(detail::to_int64(a * a - b * b));
  }
  return dims;
}

/// (sum_k C(n,k)^2 t^k) / (1 - t)^(2n): the Segre ring of P^n x P^n* cut by
/// the degree-one identity element.
inline HilbertSeries projective_space_series(int n) {
  if (n < 1) throw ValidityError("projective space needs n >= 1");
  IntPoly num;
  for (int k = 0; k <= n; ++k) {
    const mpz_class c = detail::binom(n, k);
    num.push_back(detail::to_int64(c * c));
  }
  return HilbertSeries(std::move(num), std::vector<int>(static_cast<std::size_t>(2 * n), 1));
}

inline HilbertSeries abelian_series(int n) {
  if (n < 1) throw ValidityError("abelian variety needs n >= 1");
  return HilbertSeries({1}, std::vector<int>(static_cast<std::size_t>(n), 1));
}

/// Polynomial algebra on n generators of degree 2.
inline HilbertSeries two_quadrics_series(int n) {
  if (n < 1) throw ValidityError("intersection of two quadrics needs n >= 1");
  return HilbertSeries({1}, std::vector<int>(static_cast<std::size_t>(n), 2));
}

/// Degrees of the free generators of the Hitchin base: g in degree 1 (dropped
/// for fixed determinant) and (2i-1)(g-1) = h^0(K^i) in degree i, 2 <= i <= r.
inline std::vector<int> hitchin_generator_degrees(int g, int r, int d, bool fixed_det) {
  if (g < 2) throw ValidityError("Hitchin: genus must be >= 2");
  if (r < 1 || d < 1) throw ValidityError("Hitchin: rank and degree must be >= 1");
  if (std::gcd(r, d) != 1) throw ValidityError("Hitchin: rank and degree must be coprime");
  if (fixed_det && r == 1) throw ValidityError("Hitchin: rank one with fixed determinant is a point");
  std::vector<int> degrees;
  if (!fixed_det) degrees.insert(degrees.end(), static_cast<std::size_t>(g), 1);
  for (int i = 2; i <= r; ++i) degrees.insert(degrees.end(), static_cast<std::size_t>((2 * i - 1) * (g - 1)), i);
  return degrees;
}

inline HilbertSeries hitchin_series(int g, int r, int d, bool fixed_det) {
  const auto degrees = hitchin_generator_degrees(g, r, d, fixed_det);
  return series_from_generator_degrees(degrees);
}

struct ParabolicHitchinResult {
  HilbertSeries series;
  std::vector<int> block_dims;  // block i (degree i) at index i-1
  bool valid;                   // codimension-two condition on (g, r)
};

/// h^0 of a line bundle of the given degree on a genus-g curve, for the two
/// cases that occur: K_C itself, or degree > 2g - 2 (Riemann-Roch).
inline int curve_sections(int g, int degree, bool is_canonical) {
  if (is_canonical) return g;
  if (degree <= 2 * g - 2) throw std::logic_error("curve_sections: degree not above 2g-2");
  return degree - g + 1;
}

inline ParabolicHitchinResult parabolic_hitchin_series(int g, int r, int s, ParabolicMode mode) {
  if (g < 2 || r < 1 || s < 1) throw ValidityError("parabolic Hitchin needs g >= 2, r >= 1, s >= 1");
  ParabolicHitchinResult out{HilbertSeries(), {}, g >= 4 || (g == 3 && r >= 3) || (g == 2 && r >= 5)};
  std::vector<int> degrees;
  for (int i = 1; i <= r; ++i) {
    const int k_power = mode == ParabolicMode::literal ? 1 : i;
    const int deg = k_power * (2 * g - 2) + (i - 1) * s;
    const int dim = curve_sections(g, deg, i == 1);
    out.block_dims.push_back(dim);
    degrees.insert(degrees.end(), static_cast<std::size_t>(dim), i);
  }
  out.series = series_from_generator_degrees(degrees);
  return out;
}

// ---------------------------------------------------------------------------
// Ideal presentations

namespace detail {

inline std::string index_name(char prefix, int i, int j, int bound) {
  return bound <= 9 ? std::string(1, prefix) + std::to_string(i) + std::to_string(j)
                    : std::string(1, prefix) + std::to_string(i) + "_" + std::to_string(j);
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Laplace expansion along the first row of the submatrix (rows, cols).
inline Polynomial minor_det(const PolyMatrix& u, const std::vector<int>& rows, const std::vector<int>& cols,
                            const ContextPtr& ctx) {
  if (rows.size() == 1) return u[rows[0]][cols[0]];
  Polynomial det(ctx);
  const std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<int> sub_cols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != c) sub_cols.push_back(cols[k]);
    Polynomial term = u[rows[0]][cols[c]] * minor_det(u, sub_rows, sub_cols, ctx);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

inline std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline void push_unique(std::vector<Polynomial>& gens, Polynomial p) {
  if (p.is_zero()) return;
  if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
}

}  // namespace detail

/// Square-zero n x n matrices of rank <= min(r, n-r): entries of u^2, the
/// (m+1)-minors of u, and the coefficients of the characteristic polynomial.
inline IdealPresentation grassmannian_ideal(int r, int n) {
  if (n < 2 || r < 1 || r > n - 1) throw ValidityError("Grassmannian G(r,n) needs 1 <= r <= n-1");
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) names.push_back(detail::index_name('u', i, j, n));
  const auto ctx = VariableContext::make(names);
  detail::PolyMatrix u(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u[i].push_back(Polynomial::variable(ctx, names[static_cast<std::size_t>(i * n + j)]));

  std::vector<Polynomial> gens;
  // e_k(u) = sum of principal k-minors; up to sign the coefficients of det(t - u).
  for (int k = 1; k <= n; ++k) {
    Polynomial e(ctx);
    for (const auto& idx : detail::combinations(n, k)) e += detail::minor_det(u, idx, idx, ctx);
    detail::push_unique(gens, std::move(e));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Polynomial entry(ctx);
      for (int k = 0; k < n; ++k) entry += u[i][k] * u[k][j];
      detail::push_unique(gens, std::move(entry));
    }
  const int m = std::min(r, n - r);
  for (const auto& rows : detail::combinations(n, m + 1))
    for (const auto& cols : detail::combinations(n, m + 1)) detail::push_unique(gens, detail::minor_det(u, rows, cols, ctx));

  std::string prov = "G(" + std::to_string(r) + "," + std::to_string(n) +
                     "): square-zero endomorphisms of rank <= " + std::to_string(m) +
                     "; generators u^2, (" + std::to_string(m + 1) + ")-minors, characteristic coefficients";
  if (r != 1 && n - r != 1) prov += "; radicality assumed, checked by Krull dimension only";
  return IdealPresentation(ctx, std::move(gens), {}, prov);
}

/// Pluecker ring of G(2, n+2) modulo sum_{i<j} p_ij^2, the induced form of
/// q = sum x_i^2 on the second exterior power.
inline IdealPresentation quadric_ideal(int n) {
  if (n < 1) throw ValidityError("quadric Q(n) needs n >= 1");
  const int dim_v = n + 2;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> slot(static_cast<std::size_t>(dim_v + 1),
                                             std::vector<std::size_t>(static_cast<std::size_t>(dim_v + 1)));
  for (int i = 1; i <= dim_v; ++i)
    for (int j = i + 1; j <= dim_v; ++j) {
      slot[i][j] = names.size();
      names.push_back(detail::index_name('p', i, j, dim_v));
    }
  const auto ctx = VariableContext::make(names);
  auto p = [&](int i, int j) { return Polynomial::variable(ctx, names[slot[i][j]]); };

  std::vector<Polynomial> gens;
  for (int i = 1; i <= dim_v; ++i)
    for (int j = i + 1; j <= dim_v; ++j)
      for (int k = j + 1; k <= dim_v; ++k)
        for (int l = k + 1; l <= dim_v; ++l) gens.push_back(p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k));
  Polynomial q(ctx);
  for (int i = 1; i <= dim_v; ++i)
    for (int j = i + 1; j <= dim_v; ++j) q += p(i, j) * p(i, j);
  gens.push_back(std::move(q));
  return IdealPresentation(ctx, std::move(gens), {},
                           "Q(" + std::to_string(n) + "): Pluecker ring of G(2," + std::to_string(dim_v) +
                               ") modulo the induced quadratic form sum p_ij^2");
}

// ---------------------------------------------------------------------------
// Klein rows

/// One row of the classical table of binary polyhedral invariants: generator
/// degrees of x, y, z and the relation F(x, y, z) as printed.
struct KleinTableRow {
  GroupLabel group;
  std::optional<int> n;
  std::string rotation_group;  // D_n, A_4, S_4, A_5
  std::array<int, 3> degrees;
  Polynomial relation;
  std::optional<int> relation_degree;  // empty when F is not weighted homogeneous
};

inline KleinTableRow klein_table_row(GroupLabel group, std::optional<int> n = std::nullopt) {
  const auto ctx = VariableContext::make({"x", "y", "z"});
  auto make = [&](std::string name, std::array<int, 3> d, const std::string& f) {
    KleinTableRow row{group, n, std::move(name), d, Polynomial::parse(f, ctx), std::nullopt};
    if (row.relation.is_homogeneous(row.degrees))
      row.relation_degree = weighted_degree(row.relation.leading_monomial(), row.degrees);
    return row;
  };
  switch (group) {
    case GroupLabel::binary_dihedral:
      if (!n || *n < 2) throw ValidityError("Klein(BD,n) needs n >= 2");
      return make("D_" + std::to_string(*n), {2 * *n + 2, 2 * *n, 4}, "x^2 + y^2*z + z^" + std::to_string(*n + 1));
    case GroupLabel::binary_tetrahedral:
      return make("A_4", {4, 4, 6}, "x^2 + y^3 + z^3");
    case GroupLabel::binary_octahedral:
      return make("S_4", {12, 8, 6}, "x^2 + y^3 + z^4");
    case GroupLabel::binary_icosahedral:
      return make("A_5", {30, 20, 12}, "x^2 + y^3 + z^5");
  }
  throw std::invalid_argument("unknown group label");
}

struct KleinComparison {
  MolienResult computed;
  std::optional<HilbertSeries> table;  // empty: row is not weighted homogeneous
  std::optional<bool> match;           // empty when there is no table series or no computed form
};

/// Molien computation for the row's group next to the series the row
/// predicts. The computation is authoritative; the match is reported data.
inline KleinComparison ruled_klein_series(const KleinTableRow& row, std::optional<int> window = std::nullopt) {
  const MatrixGroup group = build_group(row.group, row.n);
  KleinComparison out;
  out.computed = molien_series(group, window.value_or(default_molien_window(row.group)));
  if (row.relation_degree) out.table = series_from_generator_degrees(row.degrees, *row.relation_degree);
  if (out.table && out.computed.rational_form) out.match = series_eq(*out.computed.rational_form, *out.table);
  return out;
}

// ---------------------------------------------------------------------------
// Triviality registry

struct TrivialEntry {
  HilbertSeries series;
  std::string reason;
};

inline TrivialEntry triviality_registry(const Trivial& t) {
  switch (t.reason) {
    case TrivialReason::c1_zero_finite_pi1:
      return {HilbertSeries(), "compact Kaehler, c1 = 0 in rational cohomology, finite fundamental group: constants only"};
    case TrivialReason::general_type:
      return {HilbertSeries(), "variety of general type: constants only"};
    case TrivialReason::hypersurface:
      if (!t.degree || !t.dimension || *t.degree < 3 || *t.dimension < 2)
        throw ValidityError("hypersurface entry needs d >= 3 and dim >= 2");
      return {HilbertSeries(), "smooth hypersurface of degree " + std::to_string(*t.degree) + " >= 3, dimension " +
                                   std::to_string(*t.dimension) +
                                   " >= 2: no symmetric tensors in positive degree"};
    case TrivialReason::ruled_general_bundle:
      return {HilbertSeries(), "ruled surface P(E), E general stable rank 2 with trivial determinant: constants only"};
  }
  throw std::invalid_argument("unknown triviality reason");
}

// ---------------------------------------------------------------------------
// Geometric metadata and bounds

inline std::optional<int> dimension_of(const VarietySpec& spec);
inline Kodaira kodaira_of(const VarietySpec& spec);

namespace detail {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace detail

inline std::optional<int> dimension_of(const VarietySpec& spec) {
  return std::visit(
      detail::overloaded{
          [](const Abelian& v) -> std::optional<int> { return v.n; },
          [](const ProjectiveSpace& v) -> std::optional<int> { return v.n; },
          [](const Grassmannian& v) -> std::optional<int> { return v.r * (v.n - v.r); },
          [](const Quadric& v) -> std::optional<int> { return v.n; },
          [](const TwoQuadrics& v) -> std::optional<int> { return v.n; },
          [](const Hitchin& v) -> std::optional<int> {
            return v.fixed_det ? (v.r * v.r - 1) * (v.g - 1) : v.r * v.r * (v.g - 1) + 1;
          },
          // full flags at each parabolic point
          [](const ParabolicHitchin& v) -> std::optional<int> {
            return v.r * v.r * (v.g - 1) + 1 + v.s * v.r * (v.r - 1) / 2;
          },
          [](const RuledKlein&) -> std::optional<int> { return 2; },
          [](const Product& v) -> std::optional<int> {
            auto a = dimension_of(*v.left), b = dimension_of(*v.right);
            if (!a || !b) return std::nullopt;
            return *a + *b;
          },
          [](const Trivial& v) -> std::optional<int> {
            if (v.reason == TrivialReason::ruled_general_bundle) return 2;
            if (v.reason == TrivialReason::hypersurface) return v.dimension;
            return std::nullopt;
          },
      },
      spec.value);
}

inline Kodaira kodaira_of(const VarietySpec& spec) {
  return std::visit(
      detail::overloaded{
          [](const Abelian&) { return Kodaira::finite(0); },
          [](const ProjectiveSpace&) { return Kodaira::minus_infinity(); },
          [](const Grassmannian&) { return Kodaira::minus_infinity(); },
          [](const Quadric&) { return Kodaira::minus_infinity(); },
          // n = 1 is an elliptic curve; n >= 2 is Fano
          [](const TwoQuadrics& v) { return v.n == 1 ? Kodaira::finite(0) : Kodaira::minus_infinity(); },
          [](const Hitchin& v) {
            return (v.r == 1 && !v.fixed_det) ? Kodaira::finite(0) : Kodaira::minus_infinity();
          },
          [](const ParabolicHitchin& v) { return v.r == 1 ? Kodaira::finite(0) : Kodaira::unknown(); },
          [](const RuledKlein&) { return Kodaira::minus_infinity(); },
          [](const Product& v) {
            const Kodaira a = kodaira_of(*v.left), b = kodaira_of(*v.right);
            if (a.kind == Kodaira::Kind::minus_infinity || b.kind == Kodaira::Kind::minus_infinity)
              return Kodaira::minus_infinity();
            if (a.kind == Kodaira::Kind::unknown || b.kind == Kodaira::Kind::unknown) return Kodaira::unknown();
            return Kodaira::finite(a.value + b.value);
          },
          [](const Trivial& v) {
            switch (v.reason) {
              case TrivialReason::c1_zero_finite_pi1:
                return Kodaira::finite(0);
              case TrivialReason::ruled_general_bundle:
                return Kodaira::minus_infinity();
              case TrivialReason::hypersurface: {
                if (!v.degree || !v.dimension) return Kodaira::unknown();
                const int canonical = *v.degree - *v.dimension - 2;  // K = O(d - n - 2)
                if (canonical < 0) return Kodaira::minus_infinity();
                return Kodaira::finite(canonical == 0 ? 0 : *v.dimension);
              }
              case TrivialReason::general_type:
                return Kodaira::unknown();
            }
            return Kodaira::unknown();
          },
      },
      spec.value);
}

inline bool is_rational_homogeneous(const VarietySpec& spec) {
  return std::holds_alternative<ProjectiveSpace>(spec.value) || std::holds_alternative<Grassmannian>(spec.value) ||
         std::holds_alternative<Quadric>(spec.value);
}

struct BoundsReport {
  int krull_dim = 0;
  std::optional<int> dim_x;
  Kodaira kappa;
  bool homogeneous = false;
  bool tangent_big = false;           // krull_dim == 2 dim X
  std::optional<int> liu_bound;       // dim X - kappa when both are known
  bool liu_tight = false;
};

/// krull <= 2 dim X always, and krull <= dim X - kappa when kappa is finite.
/// A violation is an integrity error.
inline BoundsReport check_dimension_bounds(const VarietySpec& spec, const HilbertSeries& series) {
  BoundsReport r;
  r.krull_dim = krull_dim(series);
  r.dim_x = dimension_of(spec);
  r.kappa = kodaira_of(spec);
  r.homogeneous = is_rational_homogeneous(spec);
  if (r.dim_x) {
    if (r.krull_dim > 2 * *r.dim_x)
      throw IntegrityError("Krull dimension " + std::to_string(r.krull_dim) + " exceeds 2 dim X = " +
                           std::to_string(2 * *r.dim_x));
    r.tangent_big = r.krull_dim == 2 * *r.dim_x;
    if (r.kappa.kind == Kodaira::Kind::finite) {
      r.liu_bound = *r.dim_x - r.kappa.value;
      if (r.krull_dim > *r.liu_bound)
        throw IntegrityError("Krull dimension " + std::to_string(r.krull_dim) + " exceeds dim X - kappa = " +
                             std::to_string(*r.liu_bound));
      r.liu_tight = r.krull_dim == *r.liu_bound;
    }
  }
  return r;
}

}  // namespace symtensor
