#include <gtest/gtest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "stabdiv/shiftop.hpp"
#include "support.hpp"

using namespace stabdiv;
using testing_support::parse;

namespace {

const Ambient kXY({"x", "y"});

TEST(Shift, EntriesFollowNormRatio) {
  const GradedBasis h2(2, 1, 2), h3(2, 1, 3);
  const auto z1 = shift_block(2, 1, 1, 2);
  ASSERT_EQ(z1.rows(), h3.size());
  ASSERT_EQ(z1.cols(), h2.size());
  // x * xy = x^2 y: sqrt((1 + 1) / 3)
  EXPECT_NEAR(z1(h3.index_of(MultiIndex{2, 1}, 0), h2.index_of(MultiIndex{1, 1}, 0)).real(), std::sqrt(2.0 / 3.0),
              1e-15);
  EXPECT_NEAR(z1(h3.index_of(MultiIndex{3, 0}, 0), h2.index_of(MultiIndex{2, 0}, 0)).real(), 1.0, 1e-15);
  EXPECT_THROW(shift_block(2, 1, 3, 0), ValidationError);
}

TEST(Shift, RowContractionAndAdjointDerivative) {
  for (std::size_t d : {1u, 2u, 3u}) {
    for (int n = 0; n <= 8; ++n) {
      Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(GradedBasis(d, 2, n + 1).size(), GradedBasis(d, 2, n + 1).size());
      for (std::size_t i = 1; i <= d; ++i) {
        const auto z = shift_block(d, 2, i, n);
        EXPECT_LE(operator_norm(z), 1.0 + 1e-12);
        sum += z * z.adjoint();
        const Eigen::MatrixXcd adj = derivative_block(d, 2, i, n) / static_cast<double>(n + 1);
        EXPECT_LE((z.adjoint() - adj).cwiseAbs().maxCoeff(), 1e-12);
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(sum);
      EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
      EXPECT_LE(eig.eigenvalues().maxCoeff(), 1.0 + 1e-12);
    }
  }
}

TEST(Frame, DimensionsOfExampleIdeal) {
  const std::vector<CPoly> f = testing_support::to_float_all({parse("x^2+2xy", kXY), parse("y^2", kXY)});
  const auto frame = module_frame(std::span<const CPoly>(f), 2, 1, 6);
  const std::vector<std::size_t> quotient{1, 2, 1, 0, 0, 0, 0};
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(frame.dim_complement(n), quotient[static_cast<std::size_t>(n)]);
    EXPECT_EQ(frame.dim_module(n) + frame.dim_complement(n), static_cast<std::size_t>(n + 1));
    const Eigen::MatrixXcd p = frame.module_projection(n) + frame.complement_projection(n);
    EXPECT_LE((p - Eigen::MatrixXcd::Identity(p.rows(), p.cols())).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Commutators, FullSpaceBoundAndQuotientVanishing) {
  const std::vector<CPoly> f = testing_support::to_float_all({parse("x^2+2xy", kXY), parse("y^2", kXY)});
  const auto frame = module_frame(std::span<const CPoly>(f), 2, 1, 10);
  for (std::size_t i = 1; i <= 2; ++i) {
    for (std::size_t j = 1; j <= 2; ++j) {
      const auto report = commutator_report(frame, i, j, 2.0);
      ASSERT_EQ(report.rows.size(), 10u);
      for (const auto& row : report.rows) {
        EXPECT_LE(row.full_norm, row.bound + 1e-10);
        if (row.degree >= 3) {
          EXPECT_EQ(row.dim_quotient, 0u);
          EXPECT_EQ(row.quotient_norm, 0.0);
        }
      }
    }
  }
}

TEST(Commutators, OneVariableIsExplicit) {
  // one variable: Z is the unilateral shift, so [Z, Z^*] is the projection onto constants
  const std::vector<CPoly> none;
  const auto frame = module_frame(std::span<const CPoly>(none), 1, 1, 6);
  const auto report = commutator_report(frame, 1, 1, 1.0);
  EXPECT_NEAR(report.rows[0].full_norm, 1.0, 1e-15);
  for (std::size_t n = 1; n < report.rows.size(); ++n) EXPECT_NEAR(report.rows[n].full_norm, 0.0, 1e-15);
}

TEST(Estimate, PrincipalIdealIsFlat) {
  const std::vector<CPoly> f = testing_support::to_float_all({parse("x", kXY)});
  const auto frame = module_frame(std::span<const CPoly>(f), 2, 1, 12);
  const auto report = adjoint_estimate(frame, 1);
  for (const auto& row : report.rows) EXPECT_NEAR(row.scaled, 1.0, 1e-10);
  EXPECT_TRUE(report.stabilized);
  EXPECT_NEAR(report.top_to_bottom_ratio, 1.0, 1e-10);
  const auto other = adjoint_estimate(frame, 2);
  for (const auto& row : other.rows) EXPECT_NEAR(row.value, 0.0, 1e-12);
}

TEST(Estimate, FullSpaceGivesZero) {
  const std::vector<CPoly> f = testing_support::to_float_all({parse("x^2", kXY), parse("x*y", kXY), parse("y^2", kXY)});
  const auto frame = module_frame(std::span<const CPoly>(f), 2, 1, 8);
  const auto report = adjoint_estimate(frame, 1);
  for (const auto& row : report.rows) {
    if (row.degree >= 2) EXPECT_NEAR(row.value, 0.0, 1e-12);
  }
}

TEST(Quadratic, LinearToQuadratic) {
  const Ambient two({"x", "y"}, 2);
  const std::vector<QPoly> f{parse("x*e1", two), parse("x*e1 + 2y*e2", two)};
  const auto g = linear_to_quadratic(std::span<const QPoly>(f));
  const Ambient quad = quadratic_ambient(two);
  EXPECT_EQ(quad.names(), (std::vector<std::string>{"x", "y", "y1", "y2"}));
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], parse("x*y1", quad));
  EXPECT_EQ(g[1], parse("x*y1 + 2y*y2", quad));
  const std::vector<QPoly> bad{parse("x^2*e1", two)};
  EXPECT_THROW(linear_to_quadratic(std::span<const QPoly>(bad)), PreconditionError);
}

TEST(Quadratic, EmbeddingIsIsometric) {
  EXPECT_LE(verify_isometry(2, 2, 6), 1e-12);
  EXPECT_LE(verify_isometry(3, 1, 4), 1e-12);
  EXPECT_LE(verify_shift_relation(2, 2, 6), 1e-12);
  // ||U(x v1)||^2 = 2 ||x y1||^2 = 1
  const auto u = embedding_block(2, 2, 1);
  EXPECT_NEAR(u.col(0).norm(), 1.0, 1e-15);
}

TEST(Quadratic, Multipliers) {
  EXPECT_NEAR(d_multiplier(3), 2.0 / std::sqrt(3.0), 1e-15);
  for (int n = 2; n <= 20; ++n) {
    const double dp = dprime_multiplier(n);
    EXPECT_NEAR(1.0 - dp * dp, 1.0 / (n * n), 1e-13);
  }
}

TEST(Quadratic, ReducingAndReduction) {
  const Ambient two({"x", "y"}, 2);
  std::mt19937 rng(4);
  std::normal_distribution<double> gauss;
  for (int t = 0; t < 3; ++t) {
    std::vector<CPoly> f;
    for (int m = 0; m < 2; ++m) {
      CPoly g(two);
      for (int i = 0; i < 2; ++i) {
        for (int c = 0; c < 2; ++c) g.add_term(MultiIndex::unit(2, static_cast<std::size_t>(i)), Complex(gauss(rng), gauss(rng)), c);
      }
      f.push_back(g);
    }
    const auto check = verify_reducing(std::span<const CPoly>(f), 8);
    EXPECT_TRUE(check.holds(1e-10)) << check.max_residual();
    const auto report = reduce_linear_module(std::span<const CPoly>(f), 7);
    EXPECT_LE(report.isometry_residual, 1e-12);
    EXPECT_LE(report.relation_residual, 1e-12);
    EXPECT_LE(report.intertwining_residual, 1e-10);
    EXPECT_LE(report.onto_residual, 1e-10);
    EXPECT_LE(report.dprime_residual, 1e-10);
    EXPECT_LE(report.defect_residual, 1e-12);
  }
}

TEST(Shift, OneVariableEntriesAreOne) {
  for (int n = 0; n <= 6; ++n) {
    const Eigen::MatrixXcd z = shift_block(1, 1, 1, n);
    ASSERT_EQ(z.rows(), 1);
    EXPECT_NEAR(z(0, 0).real(), 1.0, 1e-15);
  }
}

TEST(Frame, PrincipalAndEmpty) {
  const std::vector<CPoly> f = testing_support::to_float_all({parse("x", kXY)});
  const auto frame = module_frame(std::span<const CPoly>(f), 2, 1, 8);
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(frame.dim_module(n), static_cast<std::size_t>(n));
    EXPECT_EQ(frame.dim_complement(n), 1u);
  }
  const std::vector<CPoly> none;
  const auto empty = module_frame(std::span<const CPoly>(none), 2, 1, 5);
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(empty.dim_module(n), 0u);
  const auto report = commutator_report(empty, 1, 2, 2.0);
  for (const auto& row : report.rows) {
    EXPECT_NEAR(row.quotient_norm, row.full_norm, 1e-14);
    EXPECT_EQ(row.module_norm, 0.0);
  }
}

TEST(Commutators, OneVariableModulesAwayFromBoundary) {
  const Ambient x({"x"});
  const std::vector<CPoly> f{to_float(parse("x^3", x))};
  const auto frame = module_frame(std::span<const CPoly>(f), 1, 1, 10);
  const auto report = commutator_report(frame, 1, 1, 2.0);
  for (const auto& row : report.rows) {
    if (row.degree >= 1) EXPECT_LE(row.full_norm, 1e-15);
    if (row.degree >= 4) EXPECT_LE(row.module_norm, 1e-15);
  }
}

TEST(Quadratic, SingleGeneratorReducesExactly) {
  const Ambient two({"x", "y"}, 2);
  const std::vector<QPoly> f{parse("x*e1", two)};
  EXPECT_EQ(linear_to_quadratic(std::span<const QPoly>(f))[0], parse("x*y1", quadratic_ambient(two)));
  const auto cf = testing_support::to_float_all(f);
  const auto check = verify_reducing(std::span<const CPoly>(cf), 6);
  EXPECT_LE(check.max_residual(), 1e-14);
}

}  // namespace
