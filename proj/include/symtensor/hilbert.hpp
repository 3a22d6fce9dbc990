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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "int_poly.hpp"
#include "poly.hpp"

namespace symtensor {

/// Truncated graded dimension sequence c_0, ..., c_D.
struct GradedDims {
  std::vector<std::int64_t> values;

  std::size_t size() const { return values.size(); }
  /// Truncation degree D.
  int truncation() const { return static_cast<int>(values.size()) - 1; }
  std::int64_t operator[](std::size_t p) const { return values.at(p); }

  /// Prefix c_0..c_D.
  GradedDims truncated(int degree) const {
    if (degree > truncation()) throw std::out_of_range("graded dims truncation beyond available degree");
    return {std::vector<std::int64_t>(values.begin(), values.begin() + degree + 1)};
  }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

/// Coefficient convolution, the graded dimensions of a tensor product.
inline GradedDims convolve(const GradedDims& a, const GradedDims& b) {
  const std::size_t n = std::min(a.size(), b.size());
  GradedDims r{std::vector<std::int64_t>(n, 0)};
  for (std::size_t d = 0; d < n; ++d)
    for (std::size_t i = 0; i <= d; ++i)
      r.values[d] = ipoly::checked_add(r.values[d], ipoly::checked_mul(a.values[i], b.values[d - i]));
  return r;
}

/// Monomial ideal kept as its minimal generating set, in a deterministic
/// order (ascending degree, then descending lex).
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators = {}) : nvars_(nvars) {
    for (const auto& g : generators)
      if (g.size() != nvars) throw std::invalid_argument("monomial ideal generator has wrong variable count");
    gens_ = minimalize(std::move(generators));
  }

  std::size_t nvars() const { return nvars_; }
  std::span<const Monomial> generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  static std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return compare(a, b, MonomialOrder::lex) == std::strong_ordering::greater;
    });
    std::vector<Monomial> kept;
    for (auto& g : gens) {
      if (std::none_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); }))
        kept.push_back(std::move(g));
    }
    return kept;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

/// N(t) / prod_i (1 - t^{w_i}). Held in canonical form: factors (1 - t^w) that
/// divide the numerator are cancelled, largest w first.
class HilbertSeries {
 public:
  HilbertSeries() : numerator_{1} {}
  HilbertSeries(IntPoly numerator, std::vector<int> weights) : numerator_(std::move(numerator)), weights_(std::move(weights)) {
    ipoly::trim(numerator_);
    for (int w : weights_)
      if (w <= 0) throw std::invalid_argument("denominator weights must be positive");
    canonicalize();
  }

  const IntPoly& numerator() const { return numerator_; }
  /// Ascending.
  const std::vector<int>& denominator_weights() const { return weights_; }

  /// e.g. "(1 - t^12) / ((1 - t^4)^2 (1 - t^6))"
  std::string to_string() const {
    std::string num = ipoly::to_string(numerator_);
    if (weights_.empty()) return num;
    const bool compound_num = std::count_if(numerator_.begin(), numerator_.end(), [](auto c) { return c != 0; }) > 1;
    if (compound_num) num = "(" + num + ")";
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < weights_.size();) {
      std::size_t j = i;
      while (j < weights_.size() && weights_[j] == weights_[i]) ++j;
      std::string f = weights_[i] == 1 ? "(1 - t)" : "(1 - t^" + std::to_string(weights_[i]) + ")";
      if (j - i > 1) f += "^" + std::to_string(j - i);
      factors.push_back(std::move(f));
      i = j;
    }
    std::string den;
    for (const auto& f : factors) den += (den.empty() ? "" : " ") + f;
    if (factors.size() > 1) den = "(" + den + ")";
    return num + " / " + den;
  }

 private:
  void canonicalize() {
    std::sort(weights_.begin(), weights_.end(), std::greater<>());
    std::vector<int> kept;
    for (int w : weights_) {
      if (!numerator_.empty()) {
        if (auto q = ipoly::divide_exact(numerator_, ipoly::one_minus_t_pow(w))) {
          numerator_ = std::move(*q);
          continue;
        }
      }
      kept.push_back(w);
    }
    std::reverse(kept.begin(), kept.end());
    weights_ = std::move(kept);
  }

  IntPoly numerator_;
  std::vector<int> weights_;
};

namespace detail {

inline IntPoly hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};

  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!gens[i].coprime(gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    IntPoly n{1};
    for (const auto& g : gens) n = ipoly::mul(n, ipoly::one_minus_t_pow(g.degree()));
    return n;
  }

  // Pivot on the variable present in the most generators, at its smallest
  // occurring exponent. Some pair shares a variable, so the count is >= 2 and
  // the pivot x^a is not itself in the ideal.
  std::vector<int> count(nvars, 0), min_exp(nvars, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < nvars; ++v) {
      if (g[v] == 0) continue;
      min_exp[v] = count[v] == 0 ? g[v] : std::min(min_exp[v], g[v]);
      ++count[v];
    }
  const std::size_t x = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
  const int a = min_exp[x];
  const Monomial pivot = Monomial::power(nvars, x, a);

  std::vector<Monomial> sum{pivot};
  std::vector<Monomial> quotient;
  for (const auto& g : gens) {
    if (!pivot.divides(g)) sum.push_back(g);
    std::vector<int> e(g.exponents().begin(), g.exponents().end());
    e[x] = std::max(0, e[x] - a);
    quotient.emplace_back(std::move(e));
  }
  IntPoly left = hilbert_numerator(MonomialIdeal::minimalize(std::move(sum)), nvars);
  IntPoly right = hilbert_numerator(MonomialIdeal::minimalize(std::move(quotient)), nvars);
  return ipoly::add(left, ipoly::shift(right, a));
}

}  // namespace detail

/// Hilbert series of k[x_1..x_k] / I by the pivot recursion
/// N(I) = N(I + <x^a>) + t^a N(I : x^a).
inline HilbertSeries series_from_monomial_ideal(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens(ideal.generators().begin(), ideal.generators().end());
  return HilbertSeries(detail::hilbert_numerator(gens, ideal.nvars()),
                       std::vector<int>(ideal.nvars(), 1));
}

/// Free algebra on generators of the given degrees, optionally cut by one
/// relation of degree relation_degree.
inline HilbertSeries series_from_generator_degrees(std::span<const int> degrees,
                                                   std::optional<int> relation_degree = std::nullopt) {
  IntPoly num{1};
  if (relation_degree) num = ipoly::one_minus_t_pow(*relation_degree);
  return HilbertSeries(std::move(num), std::vector<int>(degrees.begin(), degrees.end()));
}

/// Exact coefficients c_0..c_D. A negative coefficient is an integrity error.
inline GradedDims expand(const HilbertSeries& s, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("expand: negative truncation degree");
  std::vector<std::int64_t> c(static_cast<std::size_t>(max_degree) + 1, 0);
  const auto& num = s.numerator();
  for (std::size_t i = 0; i < num.size() && i < c.size(); ++i) c[i] = num[i];
  for (int w : s.denominator_weights())
    for (std::size_t i = static_cast<std::size_t>(w); i < c.size(); ++i) c[i] = ipoly::checked_add(c[i], c[i - w]);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 0)
      throw IntegrityError("negative Hilbert coefficient " + std::to_string(c[i]) + " at degree " + std::to_string(i) +
                           " in " + s.to_string());
  return {std::move(c)};
}

/// Series of the tensor product of two graded algebras.
inline HilbertSeries series_product(const HilbertSeries& a, const HilbertSeries& b) {
  std::vector<int> w = a.denominator_weights();
  w.insert(w.end(), b.denominator_weights().begin(), b.denominator_weights().end());
  return HilbertSeries(ipoly::mul(a.numerator(), b.numerator()), std::move(w));
}

/// Pole order at t = 1.
inline int krull_dim(const HilbertSeries& s) {
  IntPoly n = s.numerator();
  if (n.empty()) throw std::domain_error("krull_dim of the zero series");
  int multiplicity = 0;
  const IntPoly one_minus_t = ipoly::one_minus_t_pow(1);
  while (ipoly::eval_at_one(n) == 0) {
    n = *ipoly::divide_exact(n, one_minus_t);
    ++multiplicity;
  }
  const int dim = static_cast<int>(s.denominator_weights().size()) - multiplicity;
  if (dim < 0) throw IntegrityError("series " + s.to_string() + " has a zero at t = 1");
  return dim;
}

/// Equality as rational functions, by cross-multiplication.
inline bool series_eq(const HilbertSeries& a, const HilbertSeries& b) {
  IntPoly lhs = a.numerator();
  IntPoly rhs = b.numerator();
  for (int w : b.denominator_weights()) lhs = ipoly::mul(lhs, ipoly::one_minus_t_pow(w));
  for (int w : a.denominator_weights()) rhs = ipoly::mul(rhs, ipoly::one_minus_t_pow(w));
  return lhs == rhs;
}

}  // namespace symtensor
