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

// Dense univariate integer polynomials in t, stored by ascending power.
// The zero polynomial is the empty vector; every other value has a nonzero
// last coefficient. Arithmetic is overflow-checked.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace symtensor {

using IntPoly = std::vector<std::int64_t>;

namespace ipoly {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer polynomial coefficient overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer polynomial coefficient overflow");
  return r;
}

inline IntPoly& trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

inline IntPoly constant(std::int64_t c) {
  IntPoly p{c};
  return trim(p);
}

/// 1 - t^w
inline IntPoly one_minus_t_pow(int w) {
  if (w <= 0) throw std::invalid_argument("weight must be positive");
  IntPoly p(static_cast<std::size_t>(w) + 1, 0);
  p[0] = 1;
  p[static_cast<std::size_t>(w)] = -1;
  return p;
}

inline IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = checked_add(r[i], b[i]);
  return trim(r);
}

inline IntPoly negate(IntPoly a) {
  for (auto& c : a) c = checked_mul(c, -1);
  return a;
}

inline IntPoly sub(const IntPoly& a, const IntPoly& b) { return add(a, negate(b)); }

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
  }
  return trim(r);
}

/// t^k * a
inline IntPoly shift(const IntPoly& a, int k) {
  if (a.empty()) return {};
  IntPoly r(static_cast<std::size_t>(k), 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

/// Exact quotient a / b when b divides a over the integers, nullopt otherwise.
/// b must have leading coefficient +-1.
inline std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (b.back() != 1 && b.back() != -1) throw std::invalid_argument("divisor must have unit leading coefficient");
  if (a.empty()) return IntPoly{};
  if (a.size() < b.size()) return std::nullopt;
  IntPoly rem = a;
  IntPoly q(a.size() - b.size() + 1, 0);
  const std::int64_t lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t c = rem[k + b.size() - 1] * lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = checked_add(rem[k + j], -checked_mul(c, b[j]));
  }
  if (!trim(rem).empty()) return std::nullopt;
  return trim(q);
}

inline std::int64_t eval_at_one(const IntPoly& p) {
  std::int64_t s = 0;
  for (auto c : p) s = checked_add(s, c);
  return s;
}

/// Renders with ascending powers, e.g. "1 - 3*t^2 + 2*t^3".
inline std::string to_string(const IntPoly& p, const std::string& var = "t") {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const std::int64_t c = p[k];
    if (c == 0) continue;
    const std::uint64_t mag = c < 0 ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace ipoly
}  // namespace symtensor
