#pragma once

// Truncated d-shift on H^2_d (x) C^r, graded submodule frames, commutator
// diagnostics, and the maps that relate a linear submodule of H^2_d (x) C^r
// to a quadratic ideal in H^2_{d+r}.
//
// Every block is written in the orthonormal monomial basis of graded.hpp, so
// adjoints are conjugate transposes. Shift indices i, j are 1-based.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "stabdiv/graded.hpp"
#include "stabdiv/polynomial.hpp"

namespace stabdiv {

struct GradedOperatorBlock {
  /// blocks[k] maps degree degrees[k].first to degrees[k].second.
  std::vector<Eigen::MatrixXcd> blocks;
  std::vector<std::pair<int, int>> degrees;
};

/// Z_i : H_n -> H_{n+1}; the entry at (alpha + e_i, alpha) is
/// ||z^{alpha+e_i}|| / ||z^alpha|| = sqrt((alpha_i + 1) / (n + 1)).
Eigen::MatrixXcd shift_block(std::size_t nvars, int channels, std::size_t i, int n);

/// Blocks of Z_i for n = 0 .. cap - 1.
GradedOperatorBlock shift_blocks(std::size_t nvars, int channels, std::size_t i, int cap);

/// d/dz_j : H_{n+1} -> H_n, assembled by differentiating basis polynomials.
Eigen::MatrixXcd derivative_block(std::size_t nvars, int channels, std::size_t j, int n);

/// Orthonormal bases of M_n and M_n^perp for n = 0..cap, where M is the
/// module generated by homogeneous F.
class ModuleFrame {
 public:
  ModuleFrame(std::size_t nvars, int channels, int cap, std::vector<Eigen::MatrixXcd> module_bases);

  std::size_t nvars() const { return nvars_; }
  int channels() const { return channels_; }
  int cap() const { return cap_; }

  const Eigen::MatrixXcd& module_basis(int n) const { return module_[static_cast<std::size_t>(n)]; }
  const Eigen::MatrixXcd& complement_basis(int n) const { return complement_[static_cast<std::size_t>(n)]; }
  Eigen::MatrixXcd module_projection(int n) const;
  Eigen::MatrixXcd complement_projection(int n) const;
  std::size_t dim_module(int n) const { return static_cast<std::size_t>(module_basis(n).cols()); }
  std::size_t dim_complement(int n) const { return static_cast<std::size_t>(complement_basis(n).cols()); }

 private:
  std::size_t nvars_;
  int channels_;
  int cap_;
  std::vector<Eigen::MatrixXcd> module_;
  std::vector<Eigen::MatrixXcd> complement_;
};

ModuleFrame module_frame(std::span<const CPoly> generators, std::size_t nvars, int channels, int cap,
                         double rel_tol = 1e-9);

struct CommutatorRow {
  int degree = 0;
  std::size_t dim_quotient = 0;
  std::size_t dim_module = 0;
  /// ||[B_i, B_j^*]|| on M_n^perp, B = compression of Z to M^perp.
  double quotient_norm = 0.0;
  /// ||[A_i, A_j^*]|| on M_n, A = restriction of Z to M.
  double module_norm = 0.0;
  /// ||[Z_i, Z_j^*]|| on H_n.
  double full_norm = 0.0;
  /// 2 / (n + 1).
  double bound = 0.0;
  double quotient_schatten_block = 0.0;  // sum sigma^p over the block
  double quotient_partial_sum = 0.0;
  double module_schatten_block = 0.0;
  double module_partial_sum = 0.0;
  /// quotient_schatten_block / previous block; absent for the first row or a zero previous block.
  std::optional<double> tail_ratio;
};

struct CommutatorReport {
  double p = 0.0;
  std::vector<CommutatorRow> rows;
};

/// Commutator blocks on degrees 0 .. cap - 1 (degree cap would need Z to map
/// past the truncation).
CommutatorReport commutator_report(const ModuleFrame& frame, std::size_t i, std::size_t j, double p);

struct AdjointEstimateRow {
  int degree = 0;
  /// || P_n Z_j^* (E_{n+1} - P_{n+1}) ||, P_n the projection onto M_n^perp.
  double value = 0.0;
  /// value * sqrt(n + 1).
  double scaled = 0.0;
  double schatten_block = 0.0;
  double partial_sum = 0.0;
};

struct AdjointEstimateReport {
  std::vector<AdjointEstimateRow> rows;
  /// max_n value * sqrt(n + 1).
  double fitted_constant = 0.0;
  /// max of the scaled values over the top half of the window divided by
  /// their max over the bottom half (1 when both are zero).
  double top_to_bottom_ratio = 1.0;
  bool stabilized = false;
};

/// Rows for n = 0 .. cap - 1. `stabilized` holds when the top-half maximum
/// exceeds the bottom-half maximum by at most `drift_tol` relatively.
AdjointEstimateReport adjoint_estimate(const ModuleFrame& frame, std::size_t j, double p = 2.0, double drift_tol = 0.05);

/// g_m(z, y) = sum a^m_{ij} z_i y_j from f_m(z) = sum a^m_{ij} z_i (x) v_j.
/// The target ring has the d original variables followed by y1..yr.
template <Coefficient K>
std::vector<Polynomial<K>> linear_to_quadratic(std::span<const Polynomial<K>> generators);

Ambient quadratic_ambient(const Ambient& linear);

/// U : H_n(d) (x) C^r -> H_{n+1}(d + r), z^alpha v_j -> sqrt(1 + |alpha|) z^alpha y_j.
Eigen::MatrixXcd embedding_block(std::size_t nvars, int channels, int n);

/// max over basis vectors e of | ||U e|| - 1 | and of ||U^* U - I||, degrees <= cap.
double verify_isometry(std::size_t nvars, int channels, int cap);

/// max over basis vectors z^alpha v_j with |alpha| <= cap of
/// || U^* Z_i U e - sqrt((|alpha| + 1)/(|alpha| + 2)) S_i e ||, all i.
double verify_shift_relation(std::size_t nvars, int channels, int cap);

struct ReducingCheck {
  /// || (I - Pi_P) Z_i P_n || over interior degrees.
  double p_invariance = 0.0;
  /// || (I - Pi_{N - P}) Z_i (N - P)_n ||.
  double complement_invariance = 0.0;
  /// Largest component of N - P on y-degree-one monomials.
  double complement_y_degree = 0.0;
  double max_residual() const;
  bool holds(double tol = 1e-10) const { return max_residual() <= tol; }
};

/// P (the A_d-submodule of the quadratic module N generated by the g_m)
/// reduces every Z_i restricted to N, checked on degrees <= cap - 1.
ReducingCheck verify_reducing(std::span<const CPoly> linear_generators, int cap, double rel_tol = 1e-9);

struct ReductionReport {
  double isometry_residual = 0.0;
  double relation_residual = 0.0;       // U^* Z_i U = sqrt((n+1)/(n+2)) S_i
  double intertwining_residual = 0.0;   // D U^* B_i U = T_i on M
  double onto_residual = 0.0;           // U M_n inside P_{n+1}
  double dprime_residual = 0.0;         // D U^* B_i U = D' U^* B_i U D
  double defect_residual = 0.0;         // I - D'^2 = 1/n^2
  ReducingCheck reducing;
  int cap = 0;
};

/// Multiplier of D on degree n: sqrt(n + 1) / sqrt(n), n >= 1.
double d_multiplier(int n);
/// Multiplier of D' on degree n: sqrt((n - 1)(n + 1)) / n, n >= 2.
double dprime_multiplier(int n);

/// All reduction identities for a linear vector-valued family, degrees <= cap.
/// The operator identities are evaluated on degrees 2 <= n <= cap - 2.
ReductionReport reduce_linear_module(std::span<const CPoly> linear_generators, int cap);

}  // namespace stabdiv
