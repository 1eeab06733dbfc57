#include <gtest/gtest.h>

#include "stabdiv/norms.hpp"
#include "support.hpp"

using namespace stabdiv;
using testing_support::parse;

namespace {

const Ambient kXY({"x", "y"});
const Ambient kWXY({"w", "x", "y"});

TEST(L1, Examples) {
  EXPECT_EQ(l1_norm(parse("x^2+2xy", kXY)), Rational(3));
  EXPECT_EQ(l1_norm(QPoly(kXY)), Rational(0));
  for (int n = 1; n <= 12; ++n) {
    QPoly p(kXY);
    Rational c = 1;
    for (int k = 0; k < n; ++k) c *= -2;
    p.add_term(MultiIndex{1, n - 1}, c);
    Rational expected = 1;
    for (int k = 0; k < n; ++k) expected *= 2;
    EXPECT_EQ(l1_norm(p), expected);
  }
}

TEST(L1, GaussianExactWhenAxisAligned) {
  GPoly p(kXY);
  p.add_term(MultiIndex{1, 0}, GaussianRational(Rational(0), Rational(-3)));
  p.add_term(MultiIndex{0, 1}, GaussianRational(Rational(1, 2)));
  EXPECT_EQ(l1_norm_exact(p), Rational(7, 2));
  p.add_term(MultiIndex{0, 2}, GaussianRational(Rational(3), Rational(4)));
  EXPECT_FALSE(l1_norm_exact(p).has_value());
  EXPECT_NEAR(l1_norm(p), 8.5, 1e-15);
}

TEST(H2, MonomialNorms) {
  EXPECT_EQ(h2_norm_sq(parse("x*y", kXY)), Rational(1, 2));
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(monomial_norm_sq(MultiIndex{n, 0}), Rational(1));
  EXPECT_EQ(monomial_norm_sq(MultiIndex{1, 4, 0}), Rational(1, 5));   // w x^4
  EXPECT_EQ(monomial_norm_sq(MultiIndex{3, 0, 2}), Rational(1, 10));  // w^3 y^2
}

TEST(H2, FactorialTable) {
  const FactorialTable t(5);
  EXPECT_EQ(t(5), Integer(120));
  EXPECT_EQ(t.factorial(7), Integer(5040));
  EXPECT_THROW(t(6), ValidationError);
  EXPECT_EQ(default_factorials().cap(), 64);
}

TEST(H2, InnerProducts) {
  EXPECT_EQ(h2_inner(parse("x^2", kXY), parse("x*y", kXY)), Rational(0));
  const Ambient two({"x", "y"}, 2);
  EXPECT_EQ(h2_inner(parse("x^2*e1", two), parse("x^2*e2", two)), Rational(0));
  EXPECT_EQ(h2_inner(parse("x+y", kXY), parse("x-y", kXY)), Rational(0));
  EXPECT_THROW(h2_inner(parse("x", kXY), parse("x", kWXY)), DimensionError);

  GPoly p(kXY), q(kXY);
  p.add_term(MultiIndex{1, 0}, GaussianRational(Rational(0), Rational(1)));
  q.add_term(MultiIndex{1, 0}, GaussianRational(1));
  // <i x, x> = i, conjugate-linear in the second slot
  EXPECT_EQ(h2_inner(p, q), GaussianRational(Rational(0), Rational(1)));
  EXPECT_EQ(h2_inner(q, p), GaussianRational(Rational(0), Rational(-1)));
}

TEST(NormProperties, CauchySchwarzAndSelfInner) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const QPoly p = testing_support::random_poly(rng, kWXY, 5, 5);
    const QPoly q = testing_support::random_poly(rng, kWXY, 5, 5);
    const Rational ip = h2_inner(p, q);
    EXPECT_LE(Rational(ip * ip), Rational(h2_norm_sq(p) * h2_norm_sq(q)));
    EXPECT_EQ(h2_inner(p, p), h2_norm_sq(p));
  }
}

TEST(NormProperties, L1SubmultiplicativeAndMonomialEquality) {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const QPoly p = testing_support::random_poly(rng, kWXY, 4, 5);
    const QPoly q = testing_support::random_poly(rng, kWXY, 4, 5);
    EXPECT_LE(l1_norm(p * q), Rational(l1_norm(p) * l1_norm(q)));
    const QPoly mono = QPoly::monomial(kWXY, testing_support::random_index(rng, 3, 3), Rational(1));
    EXPECT_EQ(l1_norm(p * mono), l1_norm(p));
  }
}

TEST(NormProperties, PythagorasOnDisjointSupports) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const QPoly p = testing_support::random_poly(rng, kWXY, 5, 5);
    QPoly q = testing_support::random_poly(rng, kWXY, 5, 5);
    for (const auto& t : p.term_list()) q.add_term(t.index, Rational(-q.coeff(t.index)));
    EXPECT_EQ(h2_norm_sq(p + q), Rational(h2_norm_sq(p) + h2_norm_sq(q)));
  }
}

}  // namespace
