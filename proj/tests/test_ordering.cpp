#include <gtest/gtest.h>

#include <algorithm>

#include "stabdiv/ordering.hpp"
#include "support.hpp"

using namespace stabdiv;
using testing_support::parse;

namespace {

const Ambient kXY({"x", "y"});
const Ambient kWXY({"w", "x", "y"});

TEST(Order, ParseSpecs) {
  const auto g = MonomialOrder::parse("grlex:x>y", kXY);
  EXPECT_TRUE(g.is_graded());
  EXPECT_EQ(g.priority(), (std::vector<std::size_t>{0, 1}));
  const auto l = MonomialOrder::parse("lex:w>x>y", kWXY);
  EXPECT_FALSE(l.is_graded());
  EXPECT_EQ(l.to_string(kWXY), "lex:w>x>y");
  EXPECT_EQ(MonomialOrder::parse("grlex:x>w>y", kWXY).priority(), (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(MonomialOrder::parse("grlex", kXY), MonomialOrder::graded_lex(2));
  EXPECT_THROW(MonomialOrder::parse("revlex:x>y", kXY), ParseError);
  EXPECT_THROW(MonomialOrder::parse("grlex:x>z", kXY), ValidationError);
  EXPECT_THROW(MonomialOrder::parse("grlex:x", kXY), ValidationError);
  EXPECT_THROW(MonomialOrder::parse("grlex:x>x", kXY), ValidationError);
}

TEST(Order, CompareExamples) {
  const auto g = MonomialOrder::parse("grlex:x>y", kXY);
  EXPECT_EQ(g.compare(MultiIndex{2, 0}, MultiIndex{1, 1}), std::strong_ordering::greater);
  EXPECT_EQ(g.compare(MultiIndex{1, 0}, MultiIndex{1, 0}), std::strong_ordering::equal);
  const auto l = MonomialOrder::parse("lex:w>x>y", kWXY);
  EXPECT_EQ(l.compare(MultiIndex{1, 0, 1}, MultiIndex{0, 2, 0}), std::strong_ordering::greater);
}

TEST(Order, LeadingTerms) {
  const auto g = MonomialOrder::parse("grlex:x>y", kXY);
  EXPECT_EQ(leading_term(parse("x^2+2xy", kXY), g).index, (MultiIndex{2, 0}));
  const auto l = MonomialOrder::parse("lex:w>x>y", kWXY);
  EXPECT_EQ(leading_term(parse("w*y+x^2", kWXY), l).index, (MultiIndex{1, 0, 1}));
  const auto gx = MonomialOrder::parse("grlex:x>w>y", kWXY);
  EXPECT_EQ(leading_term(parse("x^2+w*y", kWXY), gx).index, (MultiIndex{0, 2, 0}));
  EXPECT_THROW(leading_term(QPoly(kXY), g), ZeroPolynomialError);

  const Ambient two({"x", "y"}, 2);
  const auto t = leading_term(parse("3x*e2 + x*e1 + y*e1", two), g);
  EXPECT_EQ(t.channel, 0);
  EXPECT_EQ(t.coeff, Rational(1));
}

TEST(Order, SortedTermsDescending) {
  const auto g = MonomialOrder::graded_lex(2);
  const auto terms = sorted_terms(parse("y^2 + x + x^2 + 2xy + 1", kXY), g);
  ASSERT_EQ(terms.size(), 5u);
  EXPECT_EQ(terms[0].index, (MultiIndex{2, 0}));
  EXPECT_EQ(terms[1].index, (MultiIndex{1, 1}));
  EXPECT_EQ(terms[4].index, (MultiIndex{0, 0}));
}

std::vector<MonomialOrder> all_orders(std::size_t d) {
  std::vector<std::size_t> p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = i;
  std::vector<MonomialOrder> out;
  do {
    out.emplace_back(OrderKind::graded_lex, p);
    out.emplace_back(OrderKind::lex, p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

TEST(OrderProperties, TotalAntisymmetricTransitiveMultiplicative) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> deg(0, 6);
  for (const auto& order : all_orders(3)) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = testing_support::random_index(rng, 3, deg(rng));
      const auto b = testing_support::random_index(rng, 3, deg(rng));
      const auto c = testing_support::random_index(rng, 3, deg(rng));
      const auto ab = order.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(order.compare(b, a), 0 <=> ab);
      if (order.less(a, b) && order.less(b, c)) EXPECT_TRUE(order.less(a, c));
      EXPECT_EQ(order.compare(a + c, b + c), ab);
      if (order.is_graded() && a.degree() < b.degree()) EXPECT_TRUE(order.less(a, b));
    }
  }
}

// independent oracle: count predecessors by enumerating all monomials of
// degree <= |gamma|
TEST(OrderProperties, HeightMatchesEnumeration) {
  for (const auto& order : all_orders(3)) {
    if (!order.is_graded()) {
      EXPECT_FALSE(height(order, MultiIndex{1, 0, 0}).has_value());
      continue;
    }
    for (int n = 0; n <= 5; ++n) {
      for (const auto& gamma : monomials_of_degree(3, n)) {
        std::uint64_t count = 0;
        for (int m = 0; m <= n; ++m) {
          for (const auto& beta : monomials_of_degree(3, m)) count += order.compare(beta, gamma) <= 0 ? 1 : 0;
        }
        EXPECT_EQ(height(order, gamma), count);
      }
    }
  }
}

}  // namespace
