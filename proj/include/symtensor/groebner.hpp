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
#include <chrono>
#include <functional>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hilbert.hpp"
#include "poly.hpp"

namespace symtensor {

/// Generators of a homogeneous ideal together with their grading. Empty
/// weights mean the standard grading.
class IdealPresentation {
 public:
  IdealPresentation(ContextPtr ctx, std::vector<Polynomial> generators, std::vector<int> weights = {},
                    std::string provenance = {})
      : ctx_(std::move(ctx)), gens_(std::move(generators)), weights_(std::move(weights)), provenance_(std::move(provenance)) {
    if (!weights_.empty()) {
      if (weights_.size() != ctx_->size()) throw std::invalid_argument("ideal: weight count differs from variable count");
      for (int w : weights_)
        if (w <= 0) throw std::invalid_argument("ideal: weights must be positive");
    }
    for (const auto& g : gens_) {
      if (!same_ring(g.context(), ctx_)) throw std::invalid_argument("ideal: generator from a different ring");
      if (g.is_zero()) throw std::invalid_argument("ideal: zero generator");
      if (!g.is_homogeneous(weights_)) throw std::invalid_argument("ideal: generator is not homogeneous: " + g.to_string());
    }
  }

  const ContextPtr& context() const { return ctx_; }
  std::span<const Polynomial> generators() const { return gens_; }
  std::span<const int> weights() const { return weights_; }
  bool standard_grading() const { return weights_.empty(); }
  const std::string& provenance() const { return provenance_; }

  int degree_of(const Monomial& m) const { return weights_.empty() ? m.degree() : weighted_degree(m, weights_); }

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> gens_;
  std::vector<int> weights_;
  std::string provenance_;
};

struct GroebnerLimits {
  std::optional<int> max_degree;
  std::optional<std::chrono::duration<double>> timeout;
};

struct GroebnerDiagnostics {
  std::size_t pairs_processed = 0;
  std::size_t pairs_pending = 0;
  std::size_t zero_reductions = 0;
  int max_degree_reached = 0;
  std::size_t basis_size = 0;
  double elapsed_seconds = 0;
};

class LimitExceeded : public std::runtime_error {
 public:
  LimitExceeded(const std::string& what, GroebnerDiagnostics diag) : std::runtime_error(what), diagnostics(diag) {}
  GroebnerDiagnostics diagnostics;
};

class GroebnerBasis {
 public:
  GroebnerBasis(ContextPtr ctx, MonomialOrder order, std::vector<Polynomial> elements, GroebnerDiagnostics diag = {})
      : ctx_(std::move(ctx)), order_(order), elements_(std::move(elements)), diag_(diag) {}

  const ContextPtr& context() const { return ctx_; }
  MonomialOrder order() const { return order_; }
  std::span<const Polynomial> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const GroebnerDiagnostics& diagnostics() const { return diag_; }

 private:
  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
  GroebnerDiagnostics diag_;
};

namespace detail {

using Clock = std::chrono::steady_clock;

// Full reduction against a fixed list of divisors, all stored in one order.
class Reducer {
 public:
  explicit Reducer(MonomialOrder order) : order_(order) {}

  void set_divisors(std::vector<const Polynomial*> divisors) { divisors_ = std::move(divisors); }

  void set_deadline(std::optional<Clock::time_point> deadline, std::function<void()> on_timeout) {
    deadline_ = deadline;
    on_timeout_ = std::move(on_timeout);
  }

  Polynomial reduce(Polynomial rem) const {
    std::vector<Term> kept;
    std::size_t steps = 0;
    while (!rem.is_zero()) {
      if (deadline_ && (++steps & 63) == 0 && Clock::now() > *deadline_) on_timeout_();
      const Term& lt = rem.leading_term();
      const Polynomial* div = nullptr;
      for (const Polynomial* d : divisors_)
        if (d->leading_monomial().divides(lt.monomial)) {
          div = d;
          break;
        }
      if (div) {
        const Rational c = lt.coeff / div->leading_coefficient();
        const Monomial m = lt.monomial / div->leading_monomial();
        rem.sub_mul_term(c, m, *div);
      } else {
        kept.push_back(rem.pop_leading_term());
      }
    }
    return Polynomial::from_terms(rem.context(), std::move(kept), order_);
  }

 private:
  MonomialOrder order_;
  std::vector<const Polynomial*> divisors_;
  std::optional<Clock::time_point> deadline_;
  std::function<void()> on_timeout_;
};

}  // namespace detail

/// Remainder of p on full division by basis: no term of the result is
/// divisible by a leading monomial of basis.
inline Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis, MonomialOrder order) {
  std::vector<Polynomial> converted;
  converted.reserve(basis.size());
  for (const auto& b : basis) {
    if (!same_ring(b.context(), p.context())) throw std::invalid_argument("normal_form: ambient mismatch");
    if (!b.is_zero()) converted.push_back(b.with_order(order));
  }
  std::vector<const Polynomial*> ptrs;
  for (const auto& b : converted) ptrs.push_back(&b);
  detail::Reducer reducer(order);
  reducer.set_divisors(std::move(ptrs));
  return reducer.reduce(p.with_order(order));
}

/// lcm/LT(f) * f - lcm/LT(g) * g, with leading terms cancelling.
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of a zero polynomial");
  const Polynomial ff = f.with_order(order);
  const Polynomial gg = g.with_order(order);
  const Monomial l = ff.leading_monomial().lcm(gg.leading_monomial());
  Polynomial s = ff.mul_term(ff.leading_coefficient().inverse(), l / ff.leading_monomial());
  s.sub_mul_term(gg.leading_coefficient().inverse(), l / gg.leading_monomial(), gg);
  return s;
}

namespace detail {

class BuchbergerRun {
 public:
  BuchbergerRun(const IdealPresentation& ideal, MonomialOrder order, const GroebnerLimits& limits)
      : ideal_(ideal), order_(order), limits_(limits), reducer_(order), start_(Clock::now()) {}

  GroebnerBasis run() {
    std::optional<Clock::time_point> deadline;
    if (limits_.timeout)
      deadline = start_ + std::chrono::duration_cast<Clock::duration>(*limits_.timeout);
    reducer_.set_deadline(deadline, [this] { fail("timeout"); });

    for (const auto& g : ideal_.generators()) inputs_.push_back(g.with_order(order_));
    for (std::size_t k = 0; k < inputs_.size(); ++k)
      queue_.insert({ideal_.degree_of(inputs_[k].leading_monomial()), 0, k, 0});

    while (!queue_.empty()) {
      const Item item = *queue_.begin();
      if (limits_.max_degree && item.degree > *limits_.max_degree) fail("degree limit");
      if (deadline && Clock::now() > *deadline) fail("timeout");
      queue_.erase(queue_.begin());
      diag_.max_degree_reached = std::max(diag_.max_degree_reached, item.degree);

      Polynomial h = item.kind == 0 ? inputs_[item.i] : s_polynomial(polys_[item.i], polys_[item.j], order_);
      if (item.kind == 1) ++diag_.pairs_processed;
      refresh_divisors();
      h = reducer_.reduce(std::move(h));
      if (h.is_zero()) {
        if (item.kind == 1) ++diag_.zero_reductions;
        continue;
      }
      update(h.monic());
    }
    return finish();
  }

 private:
  // kind 0: input generator i; kind 1: critical pair (i, j), i < j.
  struct Item {
    int degree;
    int kind;
    std::size_t i, j;
    friend auto operator<=>(const Item&, const Item&) = default;
  };

  [[noreturn]] void fail(const std::string& reason) {
    diag_.pairs_pending = queue_.size();
    diag_.basis_size = active_.size();
    diag_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    throw LimitExceeded("groebner limit exceeded (" + reason + ") after " + std::to_string(diag_.pairs_processed) +
                            " pairs, degree " + std::to_string(diag_.max_degree_reached),
                        diag_);
  }

  void refresh_divisors() {
    std::vector<const Polynomial*> ptrs;
    for (std::size_t k : active_) ptrs.push_back(&polys_[k]);
    reducer_.set_divisors(std::move(ptrs));
  }

  const Monomial& lm(std::size_t k) const { return polys_[k].leading_monomial(); }

  Item make_pair(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return {ideal_.degree_of(lm(a).lcm(lm(b))), 1, a, b};
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(Polynomial h) {
    polys_.push_back(std::move(h));
    const std::size_t hi = polys_.size() - 1;
    const Monomial& lh = lm(hi);

    std::vector<std::size_t> candidates(active_.begin(), active_.end());
    std::vector<Monomial> lcms;
    for (std::size_t g : candidates) lcms.push_back(lh.lcm(lm(g)));
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      bool keep = lh.coprime(lm(candidates[c]));
      if (!keep) {
        keep = true;
        for (std::size_t k = c + 1; k < candidates.size() && keep; ++k)
          if (lcms[k].divides(lcms[c])) keep = false;
        for (std::size_t k : kept)
          if (keep && lcms[k].divides(lcms[c])) keep = false;
      }
      if (keep) kept.push_back(c);
    }

    for (auto it = queue_.begin(); it != queue_.end();) {
      if (it->kind == 1) {
        const Monomial l = lm(it->i).lcm(lm(it->j));
        if (lh.divides(l) && lm(it->i).lcm(lh) != l && lm(it->j).lcm(lh) != l) {
          it = queue_.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (std::size_t c : kept) {
      if (lh.coprime(lm(candidates[c]))) continue;
      queue_.insert(make_pair(candidates[c], hi));
    }

    std::vector<std::size_t> next;
    for (std::size_t g : active_)
      if (!lh.divides(lm(g))) next.push_back(g);
    next.push_back(hi);
    active_ = std::move(next);
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> basis;
    for (std::size_t k : active_) basis.push_back(polys_[k]);
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
      return compare(a.leading_monomial(), b.leading_monomial(), order_) == std::strong_ordering::less;
    });
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t o = 0; o < basis.size(); ++o)
        if (o != k) others.push_back(&basis[o]);
      reducer_.set_divisors(std::move(others));
      Polynomial tail = basis[k];
      const Term lead = tail.pop_leading_term();
      Polynomial r = reducer_.reduce(std::move(tail));
      r += Polynomial::from_terms(r.context(), {lead}, order_);
      reduced.push_back(r.monic());
    }
    diag_.basis_size = reduced.size();
    diag_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return GroebnerBasis(ideal_.context(), order_, std::move(reduced), diag_);
  }

  const IdealPresentation& ideal_;
  MonomialOrder order_;
  GroebnerLimits limits_;
  Reducer reducer_;
  Clock::time_point start_;
  GroebnerDiagnostics diag_;
  std::vector<Polynomial> inputs_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::set<Item> queue_;
};

}  // namespace detail

/// Reduced Groebner basis by Buchberger's algorithm with the normal selection
/// strategy and the Gebauer-Moeller pair criteria. Throws LimitExceeded when a
/// degree or time limit is hit.
inline GroebnerBasis buchberger(const IdealPresentation& ideal, MonomialOrder order = MonomialOrder::degrevlex,
                                const GroebnerLimits& limits = {}) {
  return detail::BuchbergerRun(ideal, order, limits).run();
}

inline MonomialIdeal leading_term_ideal(const GroebnerBasis& gb) {
  std::vector<Monomial> lms;
  for (const auto& g : gb.elements()) lms.push_back(g.leading_monomial());
  return MonomialIdeal(gb.context()->size(), std::move(lms));
}

/// Buchberger criterion: every S-polynomial of the basis reduces to zero.
inline bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
  const auto elems = gb.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!normal_form(s_polynomial(elems[i], elems[j], gb.order()), elems, gb.order()).is_zero()) return false;
  return true;
}

/// No term of any element is divisible by the leading monomial of another, and
/// every element is monic.
inline bool is_reduced(const GroebnerBasis& gb) {
  const auto elems = gb.elements();
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!elems[i].leading_coefficient().is_one()) return false;
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : elems[i].terms())
        if (elems[j].leading_monomial().divides(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace symtensor
