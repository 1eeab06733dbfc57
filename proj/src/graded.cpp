#include "stabdiv/graded.hpp"

#include <cmath>

#include "stabdiv/norms.hpp"

namespace stabdiv {

GradedBasis::GradedBasis(std::size_t nvars, int channels, int degree)
    : nvars_(nvars), channels_(channels), degree_(degree), monomials_(monomials_of_degree(nvars, degree)) {
  if (nvars == 0) throw ValidationError("graded basis needs at least one variable");
  if (channels < 1) throw ValidationError("channel count must be positive");
  norms_.reserve(monomials_.size());
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    norms_.push_back(monomial_norm(monomials_[k]));
    position_.emplace(monomials_[k], k);
  }
}

Eigen::Index GradedBasis::index_of(const MultiIndex& alpha, int channel) const {
  auto it = position_.find(alpha);
  if (it == position_.end() || channel < 0 || channel >= channels_) {
    throw DimensionError("monomial is not in this graded basis");
  }
  return static_cast<Eigen::Index>(it->second) * channels_ + channel;
}

Eigen::VectorXcd to_coordinates(const CPoly& p, const GradedBasis& basis) {
  if (p.nvars() != basis.nvars() || p.channels() != basis.channels()) {
    throw DimensionError("polynomial ambient does not match the graded basis");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(basis.size());
  for (const auto& [key, c] : p.terms()) {
    if (key.index.degree() != basis.degree()) {
      throw PreconditionError("term of degree " + std::to_string(key.index.degree()) + " in a degree-" +
                              std::to_string(basis.degree()) + " coordinate map");
    }
    const Eigen::Index k = basis.index_of(key.index, key.channel);
    v(k) = c * basis.norm(k);
  }
  return v;
}

CPoly from_coordinates(const Eigen::VectorXcd& v, const GradedBasis& basis,
                       const std::shared_ptr<const Ambient>& ambient) {
  if (v.size() != basis.size()) throw DimensionError("coordinate vector has the wrong length");
  CPoly out(ambient);
  for (Eigen::Index k = 0; k < v.size(); ++k) out.add_term(basis.monomial(k), v(k) / basis.norm(k), basis.channel(k));
  return out;
}

Eigen::MatrixXcd multiplication_matrix(const CPoly& f, int source_degree) {
  if (!f.is_homogeneous()) throw PreconditionError("multiplication matrix needs a homogeneous polynomial");
  const int m = f.is_zero() ? 0 : f.total_degree();
  const GradedBasis source(f.nvars(), 1, source_degree);
  const GradedBasis target(f.nvars(), f.channels(), source_degree + m);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(target.size(), source.size());
  for (Eigen::Index col = 0; col < source.size(); ++col) {
    const MultiIndex& beta = source.monomial(col);
    for (const auto& [key, c] : f.terms()) {
      const MultiIndex gamma = key.index + beta;
      const Eigen::Index row = target.index_of(gamma, key.channel);
      a(row, col) += c * (monomial_norm(gamma) / source.norm(col));
    }
  }
  return a;
}

// Jacobi rather than divide-and-conquer SVD: the latter (Eigen 3.4.0) returns
// inaccurate factors for rank-deficient inputs with repeated singular values.
Eigen::MatrixXcd orthonormal_range(const Eigen::MatrixXcd& a, double rel_tol) {
  if (a.cols() == 0 || a.rows() == 0) return Eigen::MatrixXcd(a.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cutoff = rel_tol * s(0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXcd orthogonal_complement(const Eigen::MatrixXcd& q, Eigen::Index n) {
  if (q.rows() != n && q.cols() > 0) throw DimensionError("basis rows do not match the space dimension");
  if (q.cols() == 0) return Eigen::MatrixXcd::Identity(n, n);
  if (q.cols() >= n) return Eigen::MatrixXcd(n, 0);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(q);
  Eigen::MatrixXcd full = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  return full.rightCols(n - q.cols());
}

double operator_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues()(0);
}

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return Eigen::VectorXd(0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues();
}

}  // namespace stabdiv
