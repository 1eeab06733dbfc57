#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "stabdiv/norms.hpp"
#include "stabdiv/polynomial.hpp"
#include "support.hpp"

using namespace stabdiv;
using testing_support::parse;

namespace {

const Ambient kXY({"x", "y"});
const Ambient kWXY({"w", "x", "y"});

TEST(MultiIndex, DegreeDividesAndArithmetic) {
  const MultiIndex a{2, 1, 0};
  const MultiIndex b{3, 1, 4};
  EXPECT_EQ(a.degree(), 3);
  EXPECT_TRUE(a.divides(b));
  EXPECT_FALSE(b.divides(a));
  EXPECT_EQ(b - a, (MultiIndex{1, 0, 4}));
  EXPECT_EQ(a + b, (MultiIndex{5, 2, 4}));
  EXPECT_THROW(a - b, ValidationError);
  EXPECT_EQ(lcm(a, MultiIndex{0, 3, 1}), (MultiIndex{2, 3, 1}));
  EXPECT_TRUE(coprime(MultiIndex{2, 0, 0}, MultiIndex{0, 0, 1}));
  EXPECT_THROW(MultiIndex({1, -1}), ValidationError);
}

TEST(MultiIndex, MonomialsOfDegreeCountAndOrder) {
  const auto ms = monomials_of_degree(2, 3);
  ASSERT_EQ(ms.size(), 4u);
  EXPECT_EQ(ms.front(), (MultiIndex{3, 0}));
  EXPECT_EQ(ms.back(), (MultiIndex{0, 3}));
  for (std::size_t d = 1; d <= 4; ++d) {
    for (int n = 0; n <= 6; ++n) EXPECT_EQ(monomials_of_degree(d, n).size(), count_monomials(d, n));
  }
  EXPECT_EQ(count_monomials(3, 4), 15u);
}

TEST(Polynomial, AddCancelsAndDropsZeros) {
  const QPoly p = parse("x^2 + 2xy", kXY);
  EXPECT_EQ(p + parse("-2xy", kXY), parse("x^2", kXY));
  EXPECT_EQ(p + QPoly(kXY), p);
  EXPECT_EQ((p + parse("y^2", kXY)).size(), 3u);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Polynomial, AmbientMismatchIsDimensionError) {
  const QPoly p = parse("x", kXY);
  const QPoly q = parse("x", kWXY);
  EXPECT_THROW(p + q, DimensionError);
  EXPECT_THROW(poly_mul(p, q), DimensionError);
}

TEST(Polynomial, Products) {
  EXPECT_EQ(poly_mul(parse("x - 2y", kXY), parse("x^2 + 2xy", kXY)), parse("x^3 - 4x*y^2", kXY));
  EXPECT_EQ(poly_mul(parse("1", kXY), parse("x^2 + 2xy", kXY)), parse("x^2 + 2xy", kXY));
  EXPECT_EQ(poly_mul(parse("x^2 y", kXY), parse("x y^3", kXY)), parse("x^3 y^4", kXY));

  const Ambient two({"x", "y"}, 2);
  const QPoly v = parse("x*e1 + y*e2", two);
  EXPECT_EQ(poly_mul(parse("x", kXY), v), parse("x^2*e1 + x*y*e2", two));
  EXPECT_THROW(poly_mul(v, v), UnsupportedError);
}

TEST(Polynomial, PartialDerivative) {
  EXPECT_EQ(partial_derivative(parse("x^2 + 2xy", kXY), 0), parse("2x + 2y", kXY));
  EXPECT_TRUE(partial_derivative(parse("x^2", kXY), 1).is_zero());
  EXPECT_EQ(partial_derivative(parse("x^3", kXY), 0), parse("3x^2", kXY));
  EXPECT_THROW(partial_derivative(parse("x", kXY), 2), DimensionError);
}

TEST(Polynomial, HomogeneousComponents) {
  const QPoly p = parse("x^2 + x", kXY);
  EXPECT_EQ(homogeneous_component(p, 1), parse("x", kXY));
  EXPECT_EQ(homogeneous_component(parse("x^2+2xy", kXY), 2), parse("x^2+2xy", kXY));
  EXPECT_TRUE(homogeneous_component(parse("x^2+2xy", kXY), 3).is_zero());
}

TEST(Polynomial, SubstituteLinear) {
  const QPoly p = parse("x^2 + w*y", kWXY);
  const Rational lw(3), lx(5), ly(7);
  CoeffMatrix<Rational> diag{{lw, 0, 0}, {0, lx, 0}, {0, 0, ly}};
  QPoly expected(kWXY);
  expected.add_term(MultiIndex{0, 2, 0}, Rational(lx * lx));
  expected.add_term(MultiIndex{1, 0, 1}, Rational(lw * ly));
  EXPECT_EQ(substitute_linear(p, diag), expected);

  CoeffMatrix<Rational> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(substitute_linear(p, id), p);

  const Ambient one({"x"});
  EXPECT_EQ(substitute_linear(parse("x", one), CoeffMatrix<Rational>{{2}}), parse("2x", one));

  // non-diagonal: (x, y) -> (x + y, x - y)
  CoeffMatrix<Rational> mix{{1, 1}, {1, -1}};
  EXPECT_EQ(substitute_linear(parse("x*y", kXY), mix), parse("x^2 - y^2", kXY));

  CoeffMatrix<Complex> singular{{1.0, 2.0}, {2.0, 4.0}};
  EXPECT_THROW(substitute_linear(to_float(parse("x", kXY)), singular), SingularMatrixError);
}

TEST(Polynomial, ToFloatNearestAndOverflow) {
  const CPoly half = to_float(parse("1/2 x", kXY));
  EXPECT_EQ(half.coeff(MultiIndex{1, 0}), Complex(0.5));

  QPoly big(kXY);
  Rational c = 1;
  for (int k = 0; k < 20; ++k) c *= -2;
  big.add_term(MultiIndex{1, 19}, c);
  EXPECT_EQ(to_float(big).coeff(MultiIndex{1, 19}), Complex(1048576.0));

  const double third = to_float(parse("1/3 x", kXY)).coeff(MultiIndex{1, 0}).real();
  EXPECT_EQ(third, 1.0 / 3.0);  // nearest double

  Integer huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 400);
  QPoly overflow(kXY);
  overflow.add_term(MultiIndex{1, 0}, Rational(huge));
  EXPECT_THROW(to_float(overflow), OverflowError);
}

TEST(Polynomial, ChannelHelpers) {
  const Ambient two({"x", "y"}, 2);
  const QPoly v = parse("x*e1 + 3y*e2 - y*e1", two);
  EXPECT_EQ(channel_component(v, 0), parse("x - y", kXY));
  EXPECT_EQ(channel_component(v, 1), parse("3y", kXY));
  EXPECT_EQ(embed_channel(parse("3y", kXY), two, 1), parse("3y*e2", two));
}

// ring axioms, exact, on random small polynomials
TEST(PolynomialProperties, RingAxioms) {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const QPoly a = testing_support::random_poly(rng, kWXY, 4, 4);
    const QPoly b = testing_support::random_poly(rng, kWXY, 4, 4);
    const QPoly c = testing_support::random_poly(rng, kWXY, 4, 4);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) + c, a + (b + c));
  }
}

TEST(PolynomialProperties, ComponentsSumBack) {
  std::mt19937 rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const QPoly p = testing_support::random_poly(rng, kWXY, 6, 8);
    QPoly sum(kWXY);
    for (int n = 0; n <= std::max(0, p.total_degree()); ++n) sum += homogeneous_component(p, n);
    EXPECT_EQ(sum, p);
    QPoly sum2(kWXY);
    for (const auto& [n, part] : homogeneous_components(p)) sum2 += part;
    EXPECT_EQ(sum2, p);
  }
}

TEST(PolynomialProperties, Leibniz) {
  std::mt19937 rng(303);
  for (int trial = 0; trial < 60; ++trial) {
    const QPoly p = testing_support::random_poly(rng, kWXY, 4, 4);
    const QPoly q = testing_support::random_poly(rng, kWXY, 4, 4);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(partial_derivative(p * q, j), partial_derivative(p, j) * q + p * partial_derivative(q, j));
    }
  }
}

TEST(PolynomialProperties, SubstituteAndInvertFloat) {
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  int checked = 0;
  while (checked < 20) {
    Eigen::Matrix3cd a;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) a(i, j) = Complex(entry(rng), entry(rng));
    }
    const Eigen::Matrix3cd inv = a.inverse();
    if (a.norm() > 10 || inv.norm() > 10) continue;
    ++checked;
    CoeffMatrix<Complex> am(3, std::vector<Complex>(3)), bm(3, std::vector<Complex>(3));
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        am[i][j] = a(i, j);
        bm[i][j] = inv(i, j);
      }
    }
    const CPoly p = to_float(testing_support::random_poly(rng, kWXY, 4, 5));
    // p(A z) then z -> A^{-1} z gives p(A A^{-1} z) = p
    const CPoly back = substitute_linear(substitute_linear(p, am), bm);
    const CPoly diff = back - p;
    for (const auto& [key, c] : diff.terms()) EXPECT_LE(std::abs(c), 1e-12 * std::max(1.0, l1_norm(p)));
  }
}

TEST(PolynomialProperties, SubstitutionComposes) {
  std::mt19937 rng(505);
  for (int trial = 0; trial < 20; ++trial) {
    CoeffMatrix<Rational> a(2, std::vector<Rational>(2)), b(2, std::vector<Rational>(2)), ab(2, std::vector<Rational>(2));
    for (auto& row : a) for (auto& v : row) v = testing_support::random_rational(rng, 3, 2);
    for (auto& row : b) for (auto& v : row) v = testing_support::random_rational(rng, 3, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) ab[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
    const QPoly p = testing_support::random_poly(rng, kXY, 4, 4);
    // substituting A then B gives p(A(Bz)) = p((AB) z)
    EXPECT_EQ(substitute_linear(substitute_linear(p, a), b), substitute_linear(p, ab));
  }
}

TEST(GaussianRational, FieldOperations) {
  const GaussianRational a(Rational(1), Rational(2));
  const GaussianRational b(Rational(3), Rational(-1));
  EXPECT_EQ(a * b, GaussianRational(Rational(5), Rational(5)));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(to_string(a), "(1+2i)");
  EXPECT_THROW(a / GaussianRational(0), ZeroPolynomialError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-0.0), "0");
  EXPECT_EQ(format_double(2.0), "2");
  const double x = 1.0 / 3.0;
  EXPECT_EQ(std::stod(format_double(x)), x);
}

}  // namespace
