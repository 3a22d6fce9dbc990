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
#include <cctype>
#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace symtensor {

/// Ordered variable names of a polynomial ring. Shared immutably by every
/// polynomial living in the ring.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& n = names_[i];
      if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_'))
        throw std::invalid_argument("bad variable name '" + n + "'");
      for (char ch : n)
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
          throw std::invalid_argument("bad variable name '" + n + "'");
      if (!index_.emplace(n, i).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
  }

  static std::shared_ptr<const VariableContext> make(std::vector<std::string> names) {
    return std::make_shared<const VariableContext>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const VariableContext& a, const VariableContext& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

inline bool same_ring(const ContextPtr& a, const ContextPtr& b) { return a == b || (a && b && *a == *b); }

enum class MonomialOrder { degrevlex, lex };

inline std::string to_string(MonomialOrder order) { return order == MonomialOrder::lex ? "lex" : "degrevlex"; }

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      degree_ += e;
    }
  }

  /// x_index^power in a ring with nvars variables.
  static Monomial power(std::size_t nvars, std::size_t index, int power) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const { return exps_; }
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    return true;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      r.exps_[i] = std::max(exps_[i], other.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  /// Number of variables with a positive exponent.
  std::size_t support_size() const {
    return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](int e) { return e > 0; }));
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] + b.exps_[i];
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps_.size());
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      r.exps_[i] = a.exps_[i] - b.exps_[i];
      if (r.exps_[i] < 0) throw std::invalid_argument("monomial quotient: divisor does not divide");
    }
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// sum_i exponent_i * weight_i
inline int weighted_degree(const Monomial& m, std::span<const int> weights) {
  if (weights.size() != m.size()) throw std::invalid_argument("weighted_degree: weight count mismatch");
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights[i];
  return d;
}

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::degrevlex) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

struct Term {
  Rational coeff;
  Monomial monomial;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with Rational coefficients. Terms are kept strictly
/// descending under the polynomial's monomial order, with no zero
/// coefficients and no repeated monomials.
class Polynomial {
 public:
  explicit Polynomial(ContextPtr ctx, MonomialOrder order = MonomialOrder::degrevlex)
      : ctx_(std::move(ctx)), order_(order) {
    if (!ctx_) throw std::invalid_argument("polynomial without a variable context");
  }

  static Polynomial constant(ContextPtr ctx, const Rational& c, MonomialOrder order = MonomialOrder::degrevlex) {
    Polynomial p(std::move(ctx), order);
    if (!c.is_zero()) p.terms_.push_back({c, Monomial(p.ctx_->size())});
    return p;
  }

  static Polynomial variable(ContextPtr ctx, std::string_view name, MonomialOrder order = MonomialOrder::degrevlex) {
    auto idx = ctx->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    Polynomial p(std::move(ctx), order);
    p.terms_.push_back({Rational(1), Monomial::power(p.ctx_->size(), *idx, 1)});
    return p;
  }

  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms, MonomialOrder order = MonomialOrder::degrevlex) {
    Polynomial p(std::move(ctx), order);
    for (const auto& t : terms)
      if (t.monomial.size() != p.ctx_->size()) throw std::invalid_argument("term has wrong variable count");
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  /// Parses the textual syntax, e.g. "p12^2 + p13^2 + p23^2", "3/2*x*y - y^3",
  /// "2x y^2". Every variable must belong to ctx.
  static Polynomial parse(std::string_view text, ContextPtr ctx, MonomialOrder order = MonomialOrder::degrevlex);

  const ContextPtr& context() const { return ctx_; }
  MonomialOrder order() const { return order_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Rational& leading_coefficient() const { return leading_term().coeff; }

  /// Removes and returns the leading term.
  Term pop_leading_term() {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  Polynomial with_order(MonomialOrder order) const {
    if (order == order_) return *this;
    Polynomial p(ctx_, order);
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  /// All terms share one degree under the given weights (empty = standard).
  bool is_homogeneous(std::span<const int> weights = {}) const {
    if (terms_.empty()) return true;
    auto deg = [&](const Monomial& m) { return weights.empty() ? m.degree() : weighted_degree(m, weights); };
    const int d = deg(terms_.front().monomial);
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) { return deg(t.monomial) == d; });
  }

  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    Polynomial p = *this;
    const Rational inv = terms_.front().coeff.inverse();
    for (auto& t : p.terms_) t.coeff *= inv;
    return p;
  }

  /// c * m * this
  Polynomial mul_term(const Rational& c, const Monomial& m) const {
    Polynomial p(ctx_, order_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.monomial * m});
    return p;
  }

  /// this -= c * m * g, a single merge pass.
  void sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& g) {
    check_ring(g);
    if (&g == this || g.order_ != order_) {
      const Polynomial copy = g.with_order(order_);
      sub_mul_term(c, m, copy);
      return;
    }
    if (c.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    Monomial shifted;
    if (!g.terms_.empty()) shifted = g.terms_[0].monomial * m;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      auto cmp = i == terms_.size() ? std::strong_ordering::less : compare(terms_[i].monomial, shifted, order_);
      if (cmp == std::strong_ordering::greater) {
        out.push_back(std::move(terms_[i++]));
        continue;
      }
      if (cmp == std::strong_ordering::less) {
        out.push_back({-(g.terms_[j].coeff * c), std::move(shifted)});
      } else {
        Term t = std::move(terms_[i++]);
        t.coeff.sub_product(g.terms_[j].coeff, c);
        if (!t.coeff.is_zero()) out.push_back(std::move(t));
      }
      if (++j < g.terms_.size()) shifted = g.terms_[j].monomial * m;
    }
    terms_ = std::move(out);
  }

  Polynomial& operator+=(const Polynomial& o) {
    sub_mul_term(Rational(-1), Monomial(ctx_->size()), o);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    sub_mul_term(Rational(1), Monomial(ctx_->size()), o);
    return *this;
  }
  Polynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff *= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_ring(b);
    Polynomial p(a.ctx_, a.order_);
    p.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) p.terms_.push_back({s.coeff * t.coeff, s.monomial * t.monomial});
    p.normalize();
    return p;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Equal as elements of the ring, regardless of storage order.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ctx_, b.ctx_)) return false;
    if (a.order_ == b.order_) return a.terms_ == b.terms_;
    return a.terms_ == b.with_order(a.order_).terms_;
  }

  /// Text form with terms listed under print_order; "*" joins factors.
  std::string to_string(std::optional<MonomialOrder> print_order = std::nullopt) const {
    if (print_order && *print_order != order_) return with_order(*print_order).to_string();
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
      const auto& [c, m] = terms_[k];
      const bool neg = c.sign() < 0;
      if (k == 0) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      const Rational mag = neg ? -c : c;
      std::string factors;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!factors.empty()) factors += "*";
        factors += ctx_->name(i);
        if (m[i] > 1) factors += "^" + std::to_string(m[i]);
      }
      if (factors.empty()) {
        out += mag.to_string();
      } else if (mag.is_one()) {
        out += factors;
      } else {
        out += mag.to_string() + "*" + factors;
      }
    }
    return out;
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (!same_ring(ctx_, o.ctx_)) throw std::invalid_argument("polynomial ambient mismatch");
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [&](const Term& x, const Term& y) {
      return compare(x.monomial, y.monomial, order_) == std::strong_ordering::greater;
    });
  }

  // Sort, merge duplicate monomials, drop zeros.
  void normalize() {
    sort_terms();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

/// Maximal term of p under order.
inline std::pair<Rational, Monomial> leading_term(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (compare(t.monomial, best->monomial, order) == std::strong_ordering::greater) best = &t;
  return {best->coeff, best->monomial};
}

namespace detail {

class PolyLexer {
 public:
  enum class Kind { number, name, caret, star, plus, minus, end };
  struct Token {
    Kind kind;
    std::string text;
  };

  explicit PolyLexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }
  std::string_view source() const { return src_; }

 private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) {
      current_ = {Kind::end, ""};
      return;
    }
    const char c = src_[pos_];
    auto single = [&](Kind k) {
      current_ = {k, std::string(1, c)};
      ++pos_;
    };
    if (c == '^') return single(Kind::caret);
    if (c == '*') return single(Kind::star);
    if (c == '+') return single(Kind::plus);
    if (c == '-') return single(Kind::minus);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        std::size_t den = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (den == pos_) throw ParseError("missing denominator in '" + std::string(src_) + "'");
      }
      current_ = {Kind::number, std::string(src_.substr(start, pos_ - start))};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      current_ = {Kind::name, std::string(src_.substr(start, pos_ - start))};
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "' in '" + std::string(src_) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token current_{Kind::end, ""};
};

}  // namespace detail

inline Polynomial Polynomial::parse(std::string_view text, ContextPtr ctx, MonomialOrder order) {
  using Kind = detail::PolyLexer::Kind;
  detail::PolyLexer lex(text);
  std::vector<Term> terms;
  const std::size_t n = ctx->size();
  auto fail = [&](const std::string& why) { return ParseError(why + " in polynomial '" + std::string(text) + "'"); };

  bool first = true;
  while (lex.peek().kind != Kind::end) {
    Rational sign(1);
    if (lex.peek().kind == Kind::plus || lex.peek().kind == Kind::minus) {
      if (lex.take().kind == Kind::minus) sign = Rational(-1);
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;

    Rational coeff = sign;
    std::vector<int> exps(n, 0);
    bool have_factor = false;
    while (true) {
      const auto& tok = lex.peek();
      if (tok.kind == Kind::star) {
        if (!have_factor) throw fail("dangling '*'");
        lex.take();
        if (lex.peek().kind != Kind::number && lex.peek().kind != Kind::name) throw fail("dangling '*'");
        continue;
      }
      if (tok.kind == Kind::number) {
        coeff *= Rational::parse(lex.take().text);
        have_factor = true;
        continue;
      }
      if (tok.kind == Kind::name) {
        const std::string name = lex.take().text;
        auto idx = ctx->index_of(name);
        if (!idx) throw fail("unknown variable '" + name + "'");
        int power = 1;
        if (lex.peek().kind == Kind::caret) {
          lex.take();
          if (lex.peek().kind != Kind::number || lex.peek().text.find('/') != std::string::npos)
            throw fail("exponent must be a non-negative integer");
          power = std::stoi(lex.take().text);
        }
        exps[*idx] += power;
        have_factor = true;
        continue;
      }
      break;
    }
    if (!have_factor) throw fail("empty term");
    terms.push_back({coeff, Monomial(std::move(exps))});
  }
  if (first) throw fail("empty input");
  return from_terms(std::move(ctx), std::move(terms), order);
}

}  // namespace symtensor
