#pragma once

// Coordinates on the graded pieces H_n (x) C^r in the orthonormal basis
// z^alpha / ||z^alpha|| (x) e_j, shared by the oracle and the operator code.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "stabdiv/polynomial.hpp"

namespace stabdiv {

class GradedBasis {
 public:
  GradedBasis(std::size_t nvars, int channels, int degree);

  std::size_t nvars() const { return nvars_; }
  int channels() const { return channels_; }
  int degree() const { return degree_; }
  /// dim(H_n) * r.
  Eigen::Index size() const { return static_cast<Eigen::Index>(monomials_.size()) * channels_; }

  /// Position of z^alpha (x) e_j: monomial-major, channel-minor.
  Eigen::Index index_of(const MultiIndex& alpha, int channel) const;
  const MultiIndex& monomial(Eigen::Index k) const { return monomials_[static_cast<std::size_t>(k / channels_)]; }
  int channel(Eigen::Index k) const { return static_cast<int>(k % channels_); }
  /// ||z^alpha|| of the monomial at position k.
  double norm(Eigen::Index k) const { return norms_[static_cast<std::size_t>(k / channels_)]; }

  const std::vector<MultiIndex>& monomials() const { return monomials_; }

 private:
  std::size_t nvars_;
  int channels_;
  int degree_;
  std::vector<MultiIndex> monomials_;
  std::vector<double> norms_;
  std::map<MultiIndex, std::size_t> position_;
};

/// Coordinates of a homogeneous p of the basis degree. Terms of another
/// degree raise PreconditionError.
Eigen::VectorXcd to_coordinates(const CPoly& p, const GradedBasis& basis);

CPoly from_coordinates(const Eigen::VectorXcd& v, const GradedBasis& basis,
                       const std::shared_ptr<const Ambient>& ambient);

/// Matrix of a -> a f from scalar H_s (orthonormal basis) to H_{s+m} (x) C^r,
/// for f homogeneous of degree m.
Eigen::MatrixXcd multiplication_matrix(const CPoly& f, int source_degree);

/// Orthonormal basis of the column space, keeping singular directions with
/// sigma > rel_tol * sigma_max.
Eigen::MatrixXcd orthonormal_range(const Eigen::MatrixXcd& a, double rel_tol = 1e-9);

/// Orthonormal basis of the orthogonal complement of span(q) in C^n, where q
/// has orthonormal columns.
Eigen::MatrixXcd orthogonal_complement(const Eigen::MatrixXcd& q, Eigen::Index n);

/// Largest singular value; 0 for empty matrices.
double operator_norm(const Eigen::MatrixXcd& a);

/// Singular values, descending; empty for empty matrices.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a);

}  // namespace stabdiv
