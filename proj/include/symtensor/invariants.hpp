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

#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "hilbert.hpp"

namespace symtensor {

/// Binary polyhedral groups: preimages in SU(2) of the dihedral, tetrahedral,
/// octahedral and icosahedral rotation groups.
enum class GroupLabel { binary_dihedral, binary_tetrahedral, binary_octahedral, binary_icosahedral };

inline std::string label_name(GroupLabel label, std::optional<int> n = std::nullopt) {
  switch (label) {
    case GroupLabel::binary_dihedral:
      return "BD_" + (n ? std::to_string(*n) : std::string("n"));
    case GroupLabel::binary_tetrahedral:
      return "2T";
    case GroupLabel::binary_octahedral:
      return "2O";
    case GroupLabel::binary_icosahedral:
      return "2I";
  }
  return "?";
}

inline std::size_t expected_group_order(GroupLabel label, std::optional<int> n = std::nullopt) {
  switch (label) {
    case GroupLabel::binary_dihedral:
      if (!n || *n < 2) throw ValidityError("binary dihedral group needs n >= 2");
      return 4 * static_cast<std::size_t>(*n);
    case GroupLabel::binary_tetrahedral:
      return 24;
    case GroupLabel::binary_octahedral:
      return 48;
    case GroupLabel::binary_icosahedral:
      return 120;
  }
  return 0;
}

/// 2x2 matrix over Q(zeta_m), all entries in one field.
struct Mat2 {
  CyclotomicNumber a, b, c, d;  // rows (a b), (c d)

  static Mat2 identity(int m) { return {CyclotomicNumber(m, 1), CyclotomicNumber(m), CyclotomicNumber(m), CyclotomicNumber(m, 1)}; }

  /// Unit quaternion x0 + x1 i + x2 j + x3 k (real components) in SU(2),
  /// with i the imaginary unit of the field (4 | m).
  static Mat2 quaternion(const CyclotomicNumber& x0, const CyclotomicNumber& x1, const CyclotomicNumber& x2,
                         const CyclotomicNumber& x3) {
    const int m = x0.order();
    if (m % 4 != 0) throw std::invalid_argument("quaternion matrices need 4 | m");
    const CyclotomicNumber i = CyclotomicNumber::zeta(m, m / 4);
    return {x0 + x1 * i, x2 + x3 * i, -x2 + x3 * i, x0 - x1 * i};
  }

  CyclotomicNumber det() const { return a * d - b * c; }
  CyclotomicNumber trace() const { return a + d; }

  /// Inverse of a determinant-one matrix (the adjugate).
  Mat2 special_inverse() const { return {d, -b, -c, a}; }

  Mat2 operator-() const { return {-a, -b, -c, -d}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::string key() const {
    return a.to_string() + "|" + b.to_string() + "|" + c.to_string() + "|" + d.to_string();
  }
};

struct ConjugacyClass {
  std::size_t representative;  // index into elements()
  std::size_t size;
};

/// Finite subgroup of SL(2) over a cyclotomic field, stored as the full list
/// of elements in breadth-first order from the identity.
class MatrixGroup {
 public:
  /// Closure of generators under multiplication. Throws if the closure
  /// outgrows twice the expected order or ends at a different order.
  static MatrixGroup generate(GroupLabel label, std::optional<int> n, std::vector<Mat2> generators,
                              std::size_t expected_order) {
    if (generators.empty()) throw std::invalid_argument("group needs generators");
    MatrixGroup g;
    g.label_ = label;
    g.n_ = n;
    g.order_m_ = generators.front().a.order();
    g.generators_ = std::move(generators);

    std::unordered_map<std::string, std::size_t> seen;
    auto add = [&](Mat2 x) {
      auto [it, fresh] = seen.emplace(x.key(), g.elements_.size());
      if (fresh) g.elements_.push_back(std::move(x));
      return fresh;
    };
    add(Mat2::identity(g.order_m_));
    for (std::size_t k = 0; k < g.elements_.size(); ++k) {
      for (const auto& gen : g.generators_) {
        add(g.elements_[k] * gen);
        if (g.elements_.size() > 2 * expected_order)
          throw std::logic_error("group closure for " + label_name(label, n) + " exceeds twice the expected order " +
                                 std::to_string(expected_order));
      }
    }
    if (g.elements_.size() != expected_order)
      throw std::logic_error("group closure for " + label_name(label, n) + " has order " +
                             std::to_string(g.elements_.size()) + ", expected " + std::to_string(expected_order));
    g.index_ = std::move(seen);
    g.compute_classes();
    return g;
  }

  GroupLabel label() const { return label_; }
  std::optional<int> n_param() const { return n_; }
  std::string name() const { return label_name(label_, n_); }
  int cyclotomic_order() const { return order_m_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Mat2>& generators() const { return generators_; }
  const std::vector<Mat2>& elements() const { return elements_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }

  bool contains(const Mat2& x) const { return index_.count(x.key()) != 0; }
  std::size_t index_of(const Mat2& x) const { return index_.at(x.key()); }

 private:
  MatrixGroup() = default;

  void compute_classes() {
    std::vector<bool> assigned(elements_.size(), false);
    for (std::size_t x = 0; x < elements_.size(); ++x) {
      if (assigned[x]) continue;
      std::size_t size = 0;
      for (const auto& h : elements_) {
        const std::size_t y = index_of(h * elements_[x] * h.special_inverse());
        if (!assigned[y]) {
          assigned[y] = true;
          ++size;
        }
      }
      classes_.push_back({x, size});
    }
  }

  GroupLabel label_{};
  std::optional<int> n_;
  int order_m_ = 1;
  std::vector<Mat2> generators_;
  std::vector<Mat2> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<ConjugacyClass> classes_;
};

/// Standard generators: BD_n from diag(zeta_2n, zeta_2n^-1) and j; 2T from the
/// quaternion units i, j and -(1+i+j+k)/2; 2O adds (1+i)/sqrt(2); 2I uses
/// i, (1+i+j+k)/2 and the icosian (phi + phi^-1 i + j)/2.
inline MatrixGroup build_group(GroupLabel label, std::optional<int> n = std::nullopt) {
  const std::size_t expected = expected_group_order(label, n);
  auto rat = [](int m, long num, long den = 1) { return CyclotomicNumber(m, Rational(num, den)); };
  switch (label) {
    case GroupLabel::binary_dihedral: {
      const int m = std::lcm(2 * *n, 4);
      const CyclotomicNumber z = CyclotomicNumber::zeta(m, m / (2 * *n));
      const Mat2 rot{z, rat(m, 0), rat(m, 0), z.inverse()};
      const Mat2 j{rat(m, 0), rat(m, 1), rat(m, -1), rat(m, 0)};
      return MatrixGroup::generate(label, n, {rot, j}, expected);
    }
    case GroupLabel::binary_tetrahedral:
    case GroupLabel::binary_octahedral: {
      const int m = label == GroupLabel::binary_tetrahedral ? 4 : 8;
      const auto zero = rat(m, 0), one = rat(m, 1), minus_half = rat(m, -1, 2);
      std::vector<Mat2> gens{Mat2::quaternion(zero, one, zero, zero), Mat2::quaternion(zero, zero, one, zero),
                             Mat2::quaternion(minus_half, minus_half, minus_half, minus_half)};
      if (label == GroupLabel::binary_octahedral) {
        // 1/sqrt(2) = (zeta_8 + zeta_8^-1) / 2
        const CyclotomicNumber s = (CyclotomicNumber::zeta(8) + CyclotomicNumber::zeta(8, -1)) * Rational(1, 2);
        gens.push_back(Mat2::quaternion(s, s, zero, zero));
      }
      return MatrixGroup::generate(label, n, std::move(gens), expected);
    }
    case GroupLabel::binary_icosahedral: {
      const int m = 20;
      const auto zero = rat(m, 0), one = rat(m, 1), half = rat(m, 1, 2);
      // phi^-1 = zeta_5 + zeta_5^-1, zeta_5 = zeta_20^4
      const CyclotomicNumber phi_inv = CyclotomicNumber::zeta(m, 4) + CyclotomicNumber::zeta(m, 16);
      const CyclotomicNumber phi = one + phi_inv;
      std::vector<Mat2> gens{Mat2::quaternion(zero, one, zero, zero), Mat2::quaternion(half, half, half, half),
                             Mat2::quaternion(phi * Rational(1, 2), phi_inv * Rational(1, 2), half, zero)};
      return MatrixGroup::generate(label, n, std::move(gens), expected);
    }
  }
  throw std::invalid_argument("unknown group label");
}

namespace detail {

inline const mpz_class& binomial(unsigned long n, unsigned long k) {
  thread_local std::vector<std::vector<mpz_class>> rows;
  while (rows.size() <= n) {
    const std::size_t r = rows.size();
    std::vector<mpz_class> row(r + 1, 1);
    for (std::size_t i = 1; i < r; ++i) row[i] = rows[r - 1][i - 1] + rows[r - 1][i];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

// Traces of S^p g for p = 0..max_degree, read off the diagonal of the action
// on the monomial basis x^s y^(p-s). With g = (a b; c d) the diagonal entry
// at x^s y^(p-s) is the x^s coefficient of (a x + c y)^s (b x + d y)^(p-s);
// summing over s gives
//   tr S^p g = sum_{i+j+2k=p} C(i+k,k) C(j+k,k) a^i d^j (bc)^k.
inline std::vector<CyclotomicNumber> symmetric_power_traces(const Mat2& g, int max_degree) {
  const int m = g.a.order();
  const std::size_t D = static_cast<std::size_t>(max_degree);
  auto powers = [&](const CyclotomicNumber& x) {
    std::vector<CyclotomicNumber> p{CyclotomicNumber(m, 1)};
    for (std::size_t k = 1; k <= D; ++k) p.push_back(p.back() * x);
    return p;
  };
  const auto pa = powers(g.a), pd = powers(g.d), pw = powers(g.b * g.c);

  // ad[i][j] = a^i d^j, i + j <= D
  std::vector<std::vector<CyclotomicNumber>> ad(D + 1);
  for (std::size_t i = 0; i <= D; ++i)
    for (std::size_t j = 0; i + j <= D; ++j) ad[i].push_back(pa[i] * pd[j]);

  std::vector<CyclotomicNumber> traces;
  for (std::size_t p = 0; p <= D; ++p) {
    CyclotomicNumber tr(m);
    for (std::size_t k = 0; 2 * k <= p; ++k) {
      if (k > 0 && pw[k].is_zero()) break;
      const std::size_t q = p - 2 * k;
      CyclotomicNumber inner(m);
      for (std::size_t i = 0; i <= q; ++i) {
        const std::size_t j = q - i;
        const mpz_class coeff = binomial(i + k, k) * binomial(j + k, k);
        inner += ad[i][j] * Rational(coeff, mpz_class(1));
      }
      tr += k == 0 ? inner : inner * pw[k];
    }
    traces.push_back(std::move(tr));
  }
  return traces;
}

}  // namespace detail

/// dim (S^p V)^G for p = 0..max_degree, by averaging traces of the symmetric
/// power action over the group (one trace evaluation per conjugacy class).
/// Every average must be a non-negative rational integer.
inline GradedDims invariant_dimensions(const MatrixGroup& group, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("invariant_dimensions: negative degree");
  const int m = group.cyclotomic_order();
  std::vector<CyclotomicNumber> sums(static_cast<std::size_t>(max_degree) + 1, CyclotomicNumber(m));
  for (const auto& cls : group.classes()) {
    const auto traces = detail::symmetric_power_traces(group.elements()[cls.representative], max_degree);
    const Rational weight(static_cast<long>(cls.size));
    for (std::size_t p = 0; p < sums.size(); ++p) sums[p] += traces[p] * weight;
  }
  const Rational inv_order(1, static_cast<long>(group.order()));
  GradedDims dims;
  for (std::size_t p = 0; p < sums.size(); ++p) {
    const auto avg = (sums[p] * inv_order).to_rational();
    if (!avg) throw IntegrityError("Molien average for " + group.name() + " at degree " + std::to_string(p) + " is irrational");
    if (!avg->is_integer() || avg->sign() < 0)
      throw IntegrityError("Molien average for " + group.name() + " at degree " + std::to_string(p) + " is " +
                           avg->to_string() + ", not a non-negative integer");
    if (!avg->numerator().fits_slong_p()) throw IntegrityError("Molien average out of range");
    dims.values.push_back(avg->numerator().get_si());
  }
  return dims;
}

inline std::int64_t invariant_dimension(const MatrixGroup& group, int p) {
  if (p < 0) throw std::invalid_argument("invariant_dimension: negative degree");
  return invariant_dimensions(group, p).values.back();
}

/// Generator degrees d1 <= d2 <= d3 and relation degree e of a hypersurface
/// ring k[x,y,z]/(F).
struct HypersurfaceDegrees {
  std::array<int, 3> generators;
  int relation;

  friend bool operator==(const HypersurfaceDegrees&, const HypersurfaceDegrees&) = default;
};

/// First (d1, d2, d3, e) in lexicographic order, with even d1 <= d2 <= d3 <=
/// D/2 and 1 <= e <= D, such that (1 - t^e) / prod (1 - t^di) reproduces dims
/// through degree D.
inline std::optional<HypersurfaceDegrees> recover_hypersurface_form(const GradedDims& dims) {
  const int D = dims.truncation();
  std::vector<std::int64_t> base(static_cast<std::size_t>(D) + 1);
  for (int d1 = 2; d1 <= D / 2; d1 += 2)
    for (int d2 = d1; d2 <= D / 2; d2 += 2)
      for (int d3 = d2; d3 <= D / 2; d3 += 2) {
        std::fill(base.begin(), base.end(), 0);
        base[0] = 1;
        for (int w : {d1, d2, d3})
          for (int i = w; i <= D; ++i) base[i] += base[i - w];
        for (int e = 1; e <= D; ++e) {
          bool ok = true;
          for (int p = 0; p <= D && ok; ++p) ok = base[p] - (p >= e ? base[p - e] : 0) == dims.values[p];
          if (ok) return HypersurfaceDegrees{{d1, d2, d3}, e};
        }
      }
  return std::nullopt;
}

struct MolienResult {
  GradedDims dims;
  std::optional<HilbertSeries> rational_form;
  std::optional<HypersurfaceDegrees> matched;
};

inline int default_molien_window(GroupLabel label) { return label == GroupLabel::binary_icosahedral ? 124 : 64; }

/// Dimensions of the invariant algebra through degree max_degree, plus the
/// hypersurface form recovered from them when one fits.
inline MolienResult molien_series(const MatrixGroup& group, int max_degree) {
  MolienResult r;
  r.dims = invariant_dimensions(group, max_degree);
  r.matched = recover_hypersurface_form(r.dims);
  if (r.matched) {
    r.rational_form = series_from_generator_degrees(r.matched->generators, r.matched->relation);
  }
  return r;
}

}  // namespace symtensor
