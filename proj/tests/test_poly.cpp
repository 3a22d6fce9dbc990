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

#include <gtest/gtest.h>

#include <random>

#include <symtensor/poly.hpp>

namespace symtensor {
namespace {

class PolyTest : public ::testing::Test {
 protected:
  ContextPtr xy = VariableContext::make({"x", "y"});
  ContextPtr abcd = VariableContext::make({"a", "b", "c", "d"});

  Polynomial P(std::string_view s, MonomialOrder o = MonomialOrder::degrevlex) const { return Polynomial::parse(s, xy, o); }
};

TEST_F(PolyTest, ArithmeticExamples) {
  EXPECT_EQ(P("x + y") * P("x + y"), P("x^2 + 2*x*y + y^2"));
  const Polynomial p = P("3x^2 - 1/2 y + 7");
  EXPECT_TRUE((p + Rational(-1) * p).is_zero());
  EXPECT_EQ(P("x - y") * P("x + y"), P("x^2 - y^2"));
  EXPECT_EQ(P("x") * Rational(0), Polynomial(xy));
}

TEST_F(PolyTest, AmbientMismatchRejected) {
  const auto other = VariableContext::make({"x", "z"});
  EXPECT_THROW(P("x") + Polynomial::variable(other, "x"), std::invalid_argument);
  // identical name lists are the same ring
  const auto same = VariableContext::make({"x", "y"});
  EXPECT_EQ(P("x") + Polynomial::variable(same, "y"), P("x + y"));
}

TEST_F(PolyTest, VariableContextValidation) {
  EXPECT_THROW(VariableContext::make({"x", "x"}), std::invalid_argument);
  EXPECT_THROW(VariableContext::make({"1x"}), std::invalid_argument);
  EXPECT_THROW(VariableContext::make({"x-y"}), std::invalid_argument);
  EXPECT_EQ(abcd->index_of("c"), 2u);
  EXPECT_FALSE(abcd->index_of("e").has_value());
}

TEST(MonomialOrder, CompareExamples) {
  const Monomial x2y({2, 1}), xy2({1, 2}), x({1, 0}), y5({0, 5});
  EXPECT_EQ(compare(x2y, xy2, MonomialOrder::degrevlex), std::strong_ordering::greater);
  EXPECT_EQ(compare(x, y5, MonomialOrder::lex), std::strong_ordering::greater);
  EXPECT_EQ(compare(y5, x, MonomialOrder::degrevlex), std::strong_ordering::greater);
  for (auto o : {MonomialOrder::degrevlex, MonomialOrder::lex}) EXPECT_EQ(compare(x2y, x2y, o), std::strong_ordering::equal);
  // degrevlex on three variables: x*z^2 < y^3 since the last variable decides
  EXPECT_EQ(compare(Monomial({1, 0, 2}), Monomial({0, 3, 0}), MonomialOrder::degrevlex), std::strong_ordering::less);
  EXPECT_EQ(compare(Monomial({1, 0, 2}), Monomial({0, 3, 0}), MonomialOrder::lex), std::strong_ordering::greater);
}

TEST_F(PolyTest, LeadingTermExamples) {
  EXPECT_EQ(leading_term(P("x^2 + y^2"), MonomialOrder::degrevlex), std::make_pair(Rational(1), Monomial({2, 0})));
  EXPECT_EQ(leading_term(P("3x*y - y^3"), MonomialOrder::degrevlex), std::make_pair(Rational(-1), Monomial({0, 3})));
  EXPECT_EQ(leading_term(P("5"), MonomialOrder::degrevlex), std::make_pair(Rational(5), Monomial({0, 0})));
  EXPECT_EQ(leading_term(P("3x*y - y^3"), MonomialOrder::lex), std::make_pair(Rational(3), Monomial({1, 1})));
  EXPECT_THROW(leading_term(Polynomial(xy), MonomialOrder::degrevlex), std::invalid_argument);
}

TEST(WeightedDegree, Examples) {
  const int n = 2;
  const std::vector<int> w{2 * n + 2, 2 * n, 4};
  EXPECT_EQ(weighted_degree(Monomial({2, 0, 0}), w), 12);
  EXPECT_EQ(weighted_degree(Monomial({0, 0, n + 1}), w), 12);
  EXPECT_EQ(weighted_degree(Monomial(3), w), 0);
  EXPECT_THROW(weighted_degree(Monomial({1, 1}), w), std::invalid_argument);
}

TEST(WeightedDegree, DihedralRelationIsHomogeneous) {
  const auto ctx = VariableContext::make({"x", "y", "z"});
  for (int n = 2; n <= 6; ++n) {
    const std::vector<int> w{2 * n + 2, 2 * n, 4};
    const Polynomial f = Polynomial::parse("x^2 + y^2*z + z^" + std::to_string(n + 1), ctx);
    ASSERT_EQ(f.size(), 3u);
    for (const auto& t : f.terms()) EXPECT_EQ(weighted_degree(t.monomial, w), 4 * n + 4) << "n=" << n;
    EXPECT_TRUE(f.is_homogeneous(w));
  }
}

TEST_F(PolyTest, ParseSyntax) {
  EXPECT_EQ(P("2 x y"), P("2*x*y"));
  EXPECT_THROW(P("2xy"), ParseError);
  EXPECT_EQ(P("x^2*x"), P("x^3"));
  EXPECT_EQ(P("1/2 x - 3/4"), P("-3/4 + 1/2*x"));
  EXPECT_EQ(P("-x + x"), Polynomial(xy));
  EXPECT_THROW(P("x +"), ParseError);
  EXPECT_THROW(P("x ^ y"), ParseError);
  EXPECT_THROW(P("z"), ParseError);
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("x * * y"), ParseError);
  EXPECT_EQ(P("x*y - y^2 + 3").to_string(), "x*y - y^2 + 3");
  EXPECT_EQ(P("-x").to_string(), "-x");
}

Polynomial random_poly(const ContextPtr& ctx, std::mt19937_64& rng, MonomialOrder o = MonomialOrder::degrevlex) {
  std::uniform_int_distribution<int> nterms(0, 5), ex(0, 3), co(-5, 5), den(1, 3);
  std::vector<Term> terms;
  for (int k = nterms(rng); k > 0; --k) {
    std::vector<int> e(ctx->size());
    for (auto& v : e) v = ex(rng);
    terms.push_back({Rational(co(rng), den(rng)), Monomial(e)});
  }
  return Polynomial::from_terms(ctx, std::move(terms), o);
}

TEST_F(PolyTest, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(abcd, rng), q = random_poly(abcd, rng), r = random_poly(abcd, rng);
    ASSERT_EQ((p * q) * r, p * (q * r));
    ASSERT_EQ(p * (q + r), p * q + p * r);
    ASSERT_EQ(p * q, q * p);
    ASSERT_EQ((p + q) - q, p);
  }
}

TEST_F(PolyTest, ParseRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    for (auto o : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
      const auto p = random_poly(abcd, rng, o);
      ASSERT_EQ(Polynomial::parse(p.to_string(), abcd, o), p) << p.to_string();
      ASSERT_EQ(Polynomial::parse(p.to_string(MonomialOrder::lex), abcd), p);
    }
  }
}

TEST(MonomialOrder, MultiplicativeOnRandomTriples) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> ex(0, 4);
  auto rand_mono = [&] {
    std::vector<int> e(5);
    for (auto& v : e) v = ex(rng);
    return Monomial(e);
  };
  for (auto o : {MonomialOrder::degrevlex, MonomialOrder::lex}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const auto m = rand_mono(), m1 = rand_mono(), m2 = rand_mono();
      ASSERT_EQ(compare(m1, m2, o), compare(m * m1, m * m2, o));
      ASSERT_EQ(compare(m1, m2, o), 0 <=> compare(m2, m1, o));
      if (o == MonomialOrder::degrevlex && m1.degree() != m2.degree()) {
        ASSERT_EQ(compare(m1, m2, o), m1.degree() <=> m2.degree());
      }
    }
  }
}

TEST_F(PolyTest, LeadingTermIsMultiplicative) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(abcd, rng), q = random_poly(abcd, rng);
    if (p.is_zero() || q.is_zero()) continue;
    const auto [cp, mp] = leading_term(p, MonomialOrder::degrevlex);
    const auto [cq, mq] = leading_term(q, MonomialOrder::degrevlex);
    const auto [cpq, mpq] = leading_term(p * q, MonomialOrder::degrevlex);
    ASSERT_EQ(cpq, cp * cq);
    ASSERT_EQ(mpq, mp * mq);
  }
}

TEST_F(PolyTest, OrderConversionPreservesValue) {
  const auto p = Polynomial::parse("a^2 + b*c - 3*d^2 + a*d", abcd);
  const auto q = p.with_order(MonomialOrder::lex);
  EXPECT_EQ(p, q);
  EXPECT_EQ(q.leading_monomial(), Monomial({2, 0, 0, 0}));
  EXPECT_EQ(p.leading_monomial(), Monomial({2, 0, 0, 0}));
  EXPECT_EQ(Polynomial::parse("b*c + a*d", abcd).leading_monomial(), Monomial({0, 1, 1, 0}));
  EXPECT_EQ(Polynomial::parse("b*c + a*d", abcd, MonomialOrder::lex).leading_monomial(), Monomial({1, 0, 0, 1}));
  EXPECT_EQ(Polynomial::parse("b*c + b*d", abcd).leading_monomial(), Monomial({0, 1, 1, 0}));
}

TEST(Monomial, Operations) {
  const Monomial a({2, 0, 1}), b({1, 3, 0});
  EXPECT_EQ(a.lcm(b), Monomial({2, 3, 1}));
  EXPECT_EQ(a * b, Monomial({3, 3, 1}));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_THROW(a / b, std::invalid_argument);
  EXPECT_TRUE(Monomial({1, 0, 1}).divides(a));
  EXPECT_FALSE(a.coprime(b));
  EXPECT_TRUE(Monomial({0, 0, 1}).coprime(Monomial({1, 1, 0})));
  EXPECT_THROW(Monomial({1, -1}), std::invalid_argument);
}

}  // namespace
}  // namespace symtensor
