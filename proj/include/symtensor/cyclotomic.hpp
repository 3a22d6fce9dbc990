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

#include <cstddef>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "int_poly.hpp"
#include "rational.hpp"

namespace symtensor {

inline int euler_totient(int m) {
  if (m < 1) throw std::invalid_argument("totient of non-positive integer");
  int result = m;
  int k = m;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p != 0) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

/// The m-th cyclotomic polynomial, ascending coefficients. Memoized; the memo
/// table is guarded for concurrent callers.
inline const IntPoly& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: order must be >= 1");
  static std::mutex mutex;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(m); it != memo.end()) return it->second;
  }
  // x^m - 1 divided by every Phi_d with d | m, d < m.
  IntPoly p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto q = ipoly::divide_exact(p, cyclotomic_polynomial(d));
    if (!q) throw std::logic_error("cyclotomic_polynomial: inexact division");
    p = std::move(*q);
  }
  std::lock_guard lock(mutex);
  return memo.emplace(m, std::move(p)).first->second;
}

/// Element of Q(zeta_m), stored as the coefficient vector of its reduced
/// representative in the power basis 1, zeta, ..., zeta^(phi(m)-1).
class CyclotomicNumber {
 public:
  /// Zero of Q(zeta_1) = Q.
  CyclotomicNumber() : CyclotomicNumber(1) {}

  /// Zero of Q(zeta_order).
  explicit CyclotomicNumber(int order) : order_(order), coeffs_(static_cast<std::size_t>(euler_totient(order))) {}

  CyclotomicNumber(int order, const Rational& value) : CyclotomicNumber(order) { coeffs_[0] = value; }

  /// zeta_order^power; negative powers allowed.
  static CyclotomicNumber zeta(int order, long power = 1) {
    const long k = ((power % order) + order) % order;
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c.back() = 1;
    return from_power_coefficients(order, std::move(c));
  }

  /// sum_k c[k] zeta^k for a coefficient vector of any length.
  static CyclotomicNumber from_power_coefficients(int order, std::vector<Rational> c) {
    CyclotomicNumber r(order);
    r.coeffs_ = std::move(c);
    r.reduce();
    return r;
  }

  int order() const { return order_; }
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Returns the value if it lies in Q.
  std::optional<Rational> to_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) return std::nullopt;
    return coeffs_[0];
  }

  /// Image under zeta_m -> zeta_{new_order}^{new_order/m}.
  CyclotomicNumber embed(int new_order) const {
    if (new_order < 1 || new_order % order_ != 0)
      throw std::invalid_argument("cyclotomic embed: order " + std::to_string(order_) + " does not divide " +
                                  std::to_string(new_order));
    const std::size_t step = static_cast<std::size_t>(new_order / order_);
    std::vector<Rational> c(step * coeffs_.size() + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * step] = coeffs_[k];
    return from_power_coefficients(new_order, std::move(c));
  }

  /// Complex conjugate: zeta -> zeta^-1.
  CyclotomicNumber conjugate() const {
    std::vector<Rational> c(static_cast<std::size_t>(order_) + 1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[(order_ - static_cast<int>(k)) % order_] += coeffs_[k];
    return from_power_coefficients(order_, std::move(c));
  }

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_m.
  CyclotomicNumber inverse() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  CyclotomicNumber& operator-=(const CyclotomicNumber& o) {
    check_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  CyclotomicNumber& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
  friend CyclotomicNumber operator*(const Rational& s, CyclotomicNumber a) { return a *= s; }

  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    a.check_order(b);
    const std::size_t n = a.coeffs_.size();
    std::vector<Rational> prod(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        prod[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
      }
    }
    CyclotomicNumber r(a.order_);
    r.coeffs_ = std::move(prod);
    r.reduce();
    return r;
  }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Power-basis rendering in the symbol z, e.g. "1/2 - z^3". Doubles as a
  /// canonical key: equal values render identically.
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c.is_zero()) continue;
      std::string mag = (c.sign() < 0 ? -c : c).to_string();
      if (out.empty()) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      if (k == 0) {
        out += mag;
        continue;
      }
      if (mag != "1") out += mag + "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_order(const CyclotomicNumber& o) const {
    if (o.order_ != order_)
      throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(order_) + " vs " +
                                  std::to_string(o.order_) + " (embed into a common order first)");
  }

  // Reduce the representative modulo Phi_m (monic) down to phi(m) coefficients.
  void reduce() {
    const IntPoly& phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = coeffs_.size(); k-- > deg;) {
      if (coeffs_[k].is_zero()) continue;
      const Rational c = coeffs_[k];
      for (std::size_t j = 0; j < deg; ++j) {
        if (phi[j] == 1) {
          coeffs_[k - deg + j] -= c;
        } else if (phi[j] == -1) {
          coeffs_[k - deg + j] += c;
        } else if (phi[j] != 0) {
          coeffs_[k - deg + j].sub_product(c, Rational(static_cast<long>(phi[j])));
        }
      }
      coeffs_[k] = 0;
    }
    coeffs_.resize(deg);
  }

  int order_;
  std::vector<Rational> coeffs_;
};

namespace detail {

// Dense univariate polynomials over Q, ascending, trimmed.
using QPoly = std::vector<Rational>;

inline void qtrim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  qtrim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() < b.size()) return {QPoly{}, a};
  QPoly q(a.size() - b.size() + 1);
  const Rational lead_inv = b.back().inverse();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = a[k + b.size() - 1] * lead_inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j].sub_product(c, b[j]);
  }
  qtrim(a);
  qtrim(q);
  return {q, a};
}

inline QPoly qsub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly r = a;
  if (!q.empty() && !b.empty()) {
    if (r.size() < q.size() + b.size() - 1) r.resize(q.size() + b.size() - 1);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j].sub_product(q[i], b[j]);
  }
  qtrim(r);
  return r;
}

}  // namespace detail

inline CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw std::domain_error("cyclotomic inverse of zero");
  const IntPoly& phi = cyclotomic_polynomial(order_);
  detail::QPoly r0(phi.begin(), phi.end());
  detail::QPoly r1(coeffs_.begin(), coeffs_.end());
  detail::qtrim(r1);
  // Invariant: s_i * a == r_i (mod Phi_m).
  detail::QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = detail::qdivmod(r0, r1);
    detail::QPoly s = detail::qsub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // Phi_m is irreducible, so the gcd r0 is a nonzero constant.
  if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: non-constant gcd");
  const Rational scale = r0[0].inverse();
  for (auto& c : s0) c *= scale;
  return from_power_coefficients(order_, std::move(s0));
}

}  // namespace symtensor
