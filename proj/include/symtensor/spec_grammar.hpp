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

#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catalog.hpp"
#include "errors.hpp"

namespace symtensor {

// Grammar:
//   spec  := head '(' args? ')'
//   args  := arg (',' arg)*
//   arg   := spec | word ('=' word)?
//   word  := [A-Za-z0-9_]+
// Heads: Pn Gr Q 2Q Ab Hitchin ParHitchin Klein Prod Trivial.

namespace detail {

struct SpecNode {
  std::string head;
  struct Arg {
    std::string key;  // empty for positional
    std::string word;
    std::shared_ptr<SpecNode> nested;
  };
  std::vector<Arg> args;
};

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SpecNode parse() {
    SpecNode node = parse_node();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("variety spec '" + std::string(text_) + "': " + what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name or number");
    return std::string(text_.substr(start, pos_ - start));
  }

  SpecNode parse_node() { return parse_after_head(word()); }

  SpecNode parse_after_head(std::string head) {
    SpecNode node;
    node.head = std::move(head);
    expect('(');
    if (!peek(')')) {
      do {
        if (!node.args.empty()) ++pos_;  // the comma
        SpecNode::Arg arg;
        std::string w = word();
        if (peek('(')) {
          arg.nested = std::make_shared<SpecNode>(parse_after_head(std::move(w)));
        } else if (peek('=')) {
          ++pos_;
          arg.key = std::move(w);
          arg.word = word();
        } else {
          arg.word = std::move(w);
        }
        node.args.push_back(std::move(arg));
      } while (peek(','));
    }
    expect(')');
    return node;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline int to_int(const std::string& w, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
  if (ec != std::errc() || ptr != w.data() + w.size()) throw ParseError(what + ": expected an integer, got '" + w + "'");
  return v;
}

inline VarietySpec from_node(const SpecNode& node);

inline std::vector<int> positional_ints(const SpecNode& node, std::size_t count) {
  if (node.args.size() != count)
    throw ParseError(node.head + ": expected " + std::to_string(count) + " argument(s), got " +
                     std::to_string(node.args.size()));
  std::vector<int> out;
  for (const auto& a : node.args) {
    if (a.nested || !a.key.empty()) throw ParseError(node.head + ": expected plain integer arguments");
    out.push_back(to_int(a.word, node.head));
  }
  return out;
}

inline std::map<std::string, std::string> keyed(const SpecNode& node, std::vector<std::string>* flags) {
  std::map<std::string, std::string> out;
  for (const auto& a : node.args) {
    if (a.nested) throw ParseError(node.head + ": unexpected nested spec");
    if (a.key.empty()) {
      if (!flags) throw ParseError(node.head + ": expected key=value arguments");
      flags->push_back(a.word);
    } else if (!out.emplace(a.key, a.word).second) {
      throw ParseError(node.head + ": duplicate key '" + a.key + "'");
    }
  }
  return out;
}

inline int take_int(std::map<std::string, std::string>& kv, const std::string& key, const std::string& head) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError(head + ": missing '" + key + "'");
  const int v = to_int(it->second, head);
  kv.erase(it);
  return v;
}

inline void require_positive(int v, const std::string& what) {
  if (v < 1) throw ValidityError(what + " must be >= 1");
}

inline VarietySpec from_node(const SpecNode& node) {
  const std::string& h = node.head;
  if (h == "Pn" || h == "Q" || h == "2Q" || h == "Ab") {
    const int n = positional_ints(node, 1)[0];
    require_positive(n, h + " dimension");
    if (h == "Pn") return {ProjectiveSpace{n}};
    if (h == "Q") return {Quadric{n}};
    if (h == "2Q") return {TwoQuadrics{n}};
    return {Abelian{n}};
  }
  if (h == "Gr") {
    const auto v = positional_ints(node, 2);
    if (v[1] < 2 || v[0] < 1 || v[0] > v[1] - 1) throw ValidityError("Gr(r,n) needs 1 <= r <= n-1");
    return {Grassmannian{v[0], v[1]}};
  }
  if (h == "Hitchin") {
    std::vector<std::string> flags;
    auto kv = keyed(node, &flags);
    Hitchin s{take_int(kv, "g", h), take_int(kv, "r", h), take_int(kv, "d", h), false};
    if (!kv.empty()) throw ParseError(h + ": unknown key '" + kv.begin()->first + "'");
    for (const auto& f : flags) {
      if (f == "fixed") {
        s.fixed_det = true;
      } else if (f != "free") {
        throw ParseError(h + ": unknown flag '" + f + "'");
      }
    }
    hitchin_generator_degrees(s.g, s.r, s.d, s.fixed_det);  // validity
    return {s};
  }
  if (h == "ParHitchin") {
    auto kv = keyed(node, nullptr);
    ParabolicHitchin s{take_int(kv, "g", h), take_int(kv, "r", h), take_int(kv, "s", h), ParabolicMode::literal};
    if (auto it = kv.find("mode"); it != kv.end()) {
      if (it->second == "symmetric") {
        s.mode = ParabolicMode::symmetric_power;
      } else if (it->second != "literal") {
        throw ParseError(h + ": mode must be literal or symmetric");
      }
      kv.erase(it);
    }
    if (!kv.empty()) throw ParseError(h + ": unknown key '" + kv.begin()->first + "'");
    if (s.g < 2) throw ValidityError(h + ": genus must be >= 2");
    require_positive(s.r, h + " rank");
    require_positive(s.s, h + " number of points");
    return {s};
  }
  if (h == "Klein") {
    if (node.args.empty() || node.args[0].nested) throw ParseError("Klein: expected a group label");
    const std::string& g = node.args[0].word;
    if (g == "BD") {
      if (node.args.size() != 2 || node.args[1].nested) throw ParseError("Klein(BD,n): expected n");
      const int n = to_int(node.args[1].word, h);
      if (n < 2) throw ValidityError("Klein(BD,n) needs n >= 2");
      return {RuledKlein{GroupLabel::binary_dihedral, n}};
    }
    if (node.args.size() != 1) throw ParseError("Klein: too many arguments");
    if (g == "2T") return {RuledKlein{GroupLabel::binary_tetrahedral, std::nullopt}};
    if (g == "2O") return {RuledKlein{GroupLabel::binary_octahedral, std::nullopt}};
    if (g == "2I") return {RuledKlein{GroupLabel::binary_icosahedral, std::nullopt}};
    throw ParseError("Klein: unknown group '" + g + "'");
  }
  if (h == "Prod") {
    if (node.args.size() != 2 || !node.args[0].nested || !node.args[1].nested)
      throw ParseError("Prod: expected two nested specs");
    return {Product{std::make_shared<const VarietySpec>(from_node(*node.args[0].nested)),
                    std::make_shared<const VarietySpec>(from_node(*node.args[1].nested))}};
  }
  if (h == "Trivial") {
    if (node.args.empty() || node.args[0].nested || !node.args[0].key.empty())
      throw ParseError("Trivial: expected a reason");
    const std::string& r = node.args[0].word;
    auto rest = [&]() {
      SpecNode tail{h, {node.args.begin() + 1, node.args.end()}};
      return keyed(tail, nullptr);
    };
    if (r == "hypersurface") {
      auto kv = rest();
      Trivial t{TrivialReason::hypersurface, take_int(kv, "d", h), take_int(kv, "dim", h)};
      if (!kv.empty()) throw ParseError(h + ": unknown key '" + kv.begin()->first + "'");
      triviality_registry(t);  // validity
      return {t};
    }
    if (node.args.size() != 1) throw ParseError("Trivial(" + r + "): takes no parameters");
    if (r == "c1_zero") return {Trivial{TrivialReason::c1_zero_finite_pi1, std::nullopt, std::nullopt}};
    if (r == "general_type") return {Trivial{TrivialReason::general_type, std::nullopt, std::nullopt}};
    if (r == "ruled_general") return {Trivial{TrivialReason::ruled_general_bundle, std::nullopt, std::nullopt}};
    throw ParseError("Trivial: unknown reason '" + r + "'");
  }
  throw ParseError("unknown variety family '" + h + "'");
}

}  // namespace detail

inline VarietySpec parse_variety_spec(std::string_view text) {
  return detail::from_node(detail::SpecParser(text).parse());
}

/// Canonical text; parse_variety_spec(to_string(s)) reproduces s.
inline std::string to_string(const VarietySpec& spec) {
  using std::to_string;
  return std::visit(
      detail::overloaded{
          [](const Abelian& v) { return "Ab(" + to_string(v.n) + ")"; },
          [](const ProjectiveSpace& v) { return "Pn(" + to_string(v.n) + ")"; },
          [](const Grassmannian& v) { return "Gr(" + to_string(v.r) + "," + to_string(v.n) + ")"; },
          [](const Quadric& v) { return "Q(" + to_string(v.n) + ")"; },
          [](const TwoQuadrics& v) { return "2Q(" + to_string(v.n) + ")"; },
          [](const Hitchin& v) {
            return "Hitchin(g=" + to_string(v.g) + ",r=" + to_string(v.r) + ",d=" + to_string(v.d) +
                   (v.fixed_det ? ",fixed)" : ")");
          },
          [](const ParabolicHitchin& v) {
            return "ParHitchin(g=" + to_string(v.g) + ",r=" + to_string(v.r) + ",s=" + to_string(v.s) +
                   ",mode=" + (v.mode == ParabolicMode::literal ? "literal" : "symmetric") + ")";
          },
          [](const RuledKlein& v) {
            return v.group == GroupLabel::binary_dihedral ? "Klein(BD," + to_string(*v.n) + ")"
                                                          : "Klein(" + label_name(v.group, std::nullopt) + ")";
          },
          [](const Product& v) {
            return "Prod(" + symtensor::to_string(*v.left) + "," + symtensor::to_string(*v.right) + ")";
          },
          [](const Trivial& v) -> std::string {
            switch (v.reason) {
              case TrivialReason::c1_zero_finite_pi1:
                return "Trivial(c1_zero)";
              case TrivialReason::general_type:
                return "Trivial(general_type)";
              case TrivialReason::ruled_general_bundle:
                return "Trivial(ruled_general)";
              case TrivialReason::hypersurface:
                return "Trivial(hypersurface,d=" + to_string(v.degree.value_or(0)) +
                       ",dim=" + to_string(v.dimension.value_or(0)) + ")";
            }
            return "Trivial()";
          },
      },
      spec.value);
}

}  // namespace symtensor
