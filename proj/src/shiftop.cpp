#include "stabdiv/shiftop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stabdiv/norms.hpp"

namespace stabdiv {

namespace {

void check_shift_index(std::size_t nvars, std::size_t i) {
  if (i < 1 || i > nvars) throw ValidationError("shift index must lie in 1..d");
}

Eigen::MatrixXcd projector(const Eigen::MatrixXcd& q) { return q * q.adjoint(); }

// Largest column norm, i.e. the max over basis vectors e of ||a e||.
double max_column_norm(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return 0.0;
  return a.colwise().norm().maxCoeff();
}

double schatten_sum(const Eigen::MatrixXcd& a, double p) {
  double total = 0.0;
  const Eigen::VectorXd s = singular_values(a);
  for (Eigen::Index k = 0; k < s.size(); ++k) total += std::pow(s(k), p);
  return total;
}

// Restriction of a degree-n block to coordinates: basis_out^* z basis_in.
Eigen::MatrixXcd compress(const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& out, const Eigen::MatrixXcd& in) {
  return out.adjoint() * z * in;
}

// [X_i, X_j^*] on degree n, from per-degree blocks of X_i and X_j (blk(n): n -> n+1).
template <class BlockI, class BlockJ>
Eigen::MatrixXcd commutator_on(int n, Eigen::Index dim, const BlockI& xi, const BlockJ& xj) {
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, dim);
  if (dim == 0) return c;
  if (n >= 1) c += xi(n - 1) * xj(n - 1).adjoint();
  c -= xj(n).adjoint() * xi(n);
  return c;
}

}  // namespace

Eigen::MatrixXcd shift_block(std::size_t nvars, int channels, std::size_t i, int n) {
  check_shift_index(nvars, i);
  const GradedBasis source(nvars, channels, n);
  const GradedBasis target(nvars, channels, n + 1);
  Eigen::MatrixXcd z = Eigen::MatrixXcd::Zero(target.size(), source.size());
  for (Eigen::Index k = 0; k < source.size(); ++k) {
    const MultiIndex& alpha = source.monomial(k);
    const double entry = std::sqrt(static_cast<double>(alpha[i - 1] + 1) / static_cast<double>(n + 1));
    z(target.index_of(alpha.shifted(i - 1, 1), source.channel(k)), k) = entry;
  }
  return z;
}

GradedOperatorBlock shift_blocks(std::size_t nvars, int channels, std::size_t i, int cap) {
  if (cap < 1) throw ValidationError("degree cap must be at least 1");
  GradedOperatorBlock out;
  for (int n = 0; n < cap; ++n) {
    out.blocks.push_back(shift_block(nvars, channels, i, n));
    out.degrees.emplace_back(n, n + 1);
  }
  return out;
}

Eigen::MatrixXcd derivative_block(std::size_t nvars, int channels, std::size_t j, int n) {
  check_shift_index(nvars, j);
  const GradedBasis source(nvars, channels, n + 1);
  const GradedBasis target(nvars, channels, n);
  const auto ambient = std::make_shared<const Ambient>(Ambient::standard(nvars, channels));
  Eigen::MatrixXcd out(target.size(), source.size());
  for (Eigen::Index k = 0; k < source.size(); ++k) {
    CPoly e(ambient);
    e.add_term(source.monomial(k), Complex(1.0 / source.norm(k)), source.channel(k));
    out.col(k) = to_coordinates(partial_derivative(e, j - 1), target);
  }
  return out;
}

ModuleFrame::ModuleFrame(std::size_t nvars, int channels, int cap, std::vector<Eigen::MatrixXcd> module_bases)
    : nvars_(nvars), channels_(channels), cap_(cap), module_(std::move(module_bases)) {
  if (cap < 0 || module_.size() != static_cast<std::size_t>(cap) + 1) {
    throw DimensionError("module frame needs one basis per degree 0..cap");
  }
  for (int n = 0; n <= cap; ++n) {
    const Eigen::Index dim = GradedBasis(nvars, channels, n).size();
    auto& q = module_[static_cast<std::size_t>(n)];
    if (q.cols() == 0) q.resize(dim, 0);
    if (q.rows() != dim) throw DimensionError("module basis has the wrong row count at degree " + std::to_string(n));
    complement_.push_back(orthogonal_complement(q, dim));
  }
}

Eigen::MatrixXcd ModuleFrame::module_projection(int n) const { return projector(module_basis(n)); }
Eigen::MatrixXcd ModuleFrame::complement_projection(int n) const { return projector(complement_basis(n)); }

namespace {

Eigen::MatrixXcd module_columns(std::span<const CPoly> generators, std::size_t nvars, int channels, int n) {
  const Eigen::Index rows = GradedBasis(nvars, channels, n).size();
  std::vector<Eigen::MatrixXcd> parts;
  Eigen::Index cols = 0;
  for (const auto& f : generators) {
    const int s = n - f.total_degree();
    if (s < 0) continue;
    parts.push_back(multiplication_matrix(f, s));
    cols += parts.back().cols();
  }
  Eigen::MatrixXcd out(rows, cols);
  Eigen::Index at = 0;
  for (const auto& p : parts) {
    out.middleCols(at, p.cols()) = p;
    at += p.cols();
  }
  return out;
}

}  // namespace

ModuleFrame module_frame(std::span<const CPoly> generators, std::size_t nvars, int channels, int cap,
                         double rel_tol) {
  for (const auto& f : generators) {
    if (f.nvars() != nvars || f.channels() != channels) throw DimensionError("generator ambient does not match the frame");
    if (f.is_zero() || !f.is_homogeneous()) throw PreconditionError("frame generators must be nonzero and homogeneous");
  }
  std::vector<Eigen::MatrixXcd> bases;
  for (int n = 0; n <= cap; ++n) bases.push_back(orthonormal_range(module_columns(generators, nvars, channels, n), rel_tol));
  return ModuleFrame(nvars, channels, cap, std::move(bases));
}

CommutatorReport commutator_report(const ModuleFrame& frame, std::size_t i, std::size_t j, double p) {
  if (!(p > 0.0)) throw ValidationError("Schatten exponent must be positive");
  check_shift_index(frame.nvars(), i);
  check_shift_index(frame.nvars(), j);
  const int cap = frame.cap();
  if (cap < 1) throw ValidationError("commutator report needs a degree cap of at least 1");
  const auto zi = shift_blocks(frame.nvars(), frame.channels(), i, cap);
  const auto zj = shift_blocks(frame.nvars(), frame.channels(), j, cap);

  auto full_i = [&](int n) -> const Eigen::MatrixXcd& { return zi.blocks[static_cast<std::size_t>(n)]; };
  auto full_j = [&](int n) -> const Eigen::MatrixXcd& { return zj.blocks[static_cast<std::size_t>(n)]; };
  auto mod = [&](const GradedOperatorBlock& z) {
    return [&frame, &z](int n) {
      return compress(z.blocks[static_cast<std::size_t>(n)], frame.module_basis(n + 1), frame.module_basis(n));
    };
  };
  auto quo = [&](const GradedOperatorBlock& z) {
    return [&frame, &z](int n) {
      return compress(z.blocks[static_cast<std::size_t>(n)], frame.complement_basis(n + 1), frame.complement_basis(n));
    };
  };

  CommutatorReport report;
  report.p = p;
  double q_sum = 0.0;
  double m_sum = 0.0;
  for (int n = 0; n < cap; ++n) {
    CommutatorRow row;
    row.degree = n;
    row.dim_quotient = frame.dim_complement(n);
    row.dim_module = frame.dim_module(n);
    row.bound = 2.0 / (n + 1);
    const Eigen::Index full_dim = GradedBasis(frame.nvars(), frame.channels(), n).size();
    row.full_norm = operator_norm(commutator_on(n, full_dim, full_i, full_j));
    const auto cm = commutator_on(n, static_cast<Eigen::Index>(row.dim_module), mod(zi), mod(zj));
    const auto cq = commutator_on(n, static_cast<Eigen::Index>(row.dim_quotient), quo(zi), quo(zj));
    row.module_norm = operator_norm(cm);
    row.quotient_norm = operator_norm(cq);
    row.module_schatten_block = schatten_sum(cm, p);
    row.quotient_schatten_block = schatten_sum(cq, p);
    m_sum += row.module_schatten_block;
    q_sum += row.quotient_schatten_block;
    row.module_partial_sum = m_sum;
    row.quotient_partial_sum = q_sum;
    if (!report.rows.empty() && report.rows.back().quotient_schatten_block > 0.0) {
      row.tail_ratio = row.quotient_schatten_block / report.rows.back().quotient_schatten_block;
    }
    report.rows.push_back(row);
  }
  return report;
}

AdjointEstimateReport adjoint_estimate(const ModuleFrame& frame, std::size_t j, double p, double drift_tol) {
  if (!(p > 0.0)) throw ValidationError("Schatten exponent must be positive");
  check_shift_index(frame.nvars(), j);
  AdjointEstimateReport report;
  double sum = 0.0;
  for (int n = 0; n < frame.cap(); ++n) {
    const Eigen::MatrixXcd z = shift_block(frame.nvars(), frame.channels(), j, n);
    // P_n Z_j^* restricted to M_{n+1}, in orthonormal coordinates
    const Eigen::MatrixXcd block = frame.complement_basis(n).adjoint() * z.adjoint() * frame.module_basis(n + 1);
    AdjointEstimateRow row;
    row.degree = n;
    row.value = operator_norm(block);
    row.scaled = row.value * std::sqrt(static_cast<double>(n + 1));
    row.schatten_block = schatten_sum(block, p);
    sum += row.schatten_block;
    row.partial_sum = sum;
    report.fitted_constant = std::max(report.fitted_constant, row.scaled);
    report.rows.push_back(row);
  }
  const std::size_t half = report.rows.size() / 2;
  double bottom = 0.0;
  double top = 0.0;
  for (std::size_t k = 0; k < report.rows.size(); ++k) (k < half ? bottom : top) = std::max(k < half ? bottom : top, report.rows[k].scaled);
  if (bottom == 0.0 && top == 0.0) {
    report.top_to_bottom_ratio = 1.0;
  } else if (bottom == 0.0) {
    report.top_to_bottom_ratio = std::numeric_limits<double>::infinity();
  } else {
    report.top_to_bottom_ratio = top / bottom;
  }
  report.stabilized = report.top_to_bottom_ratio <= 1.0 + drift_tol;
  return report;
}

Ambient quadratic_ambient(const Ambient& linear) {
  std::vector<std::string> names = linear.names();
  for (const char* prefix : {"y", "u", "t", "s", "q"}) {
    bool clash = false;
    for (int j = 1; j <= linear.channels(); ++j) clash = clash || linear.find(prefix + std::to_string(j)) >= 0;
    if (clash) continue;
    for (int j = 1; j <= linear.channels(); ++j) names.push_back(prefix + std::to_string(j));
    return Ambient(names, 1);
  }
  throw ValidationError("no free names for the channel variables");
}

template <Coefficient K>
std::vector<Polynomial<K>> linear_to_quadratic(std::span<const Polynomial<K>> generators) {
  std::vector<Polynomial<K>> out;
  if (generators.empty()) return out;
  const auto target = std::make_shared<const Ambient>(quadratic_ambient(generators.front().ambient()));
  const std::size_t d = generators.front().nvars();
  for (std::size_t m = 0; m < generators.size(); ++m) {
    const auto& f = generators[m];
    generators.front().require_compatible(f);
    if (f.is_zero() || f.total_degree() != 1 || f.min_degree() != 1) {
      throw PreconditionError("generator " + std::to_string(m + 1) + " is not homogeneous of degree 1");
    }
    Polynomial<K> g(target);
    for (const auto& [key, c] : f.terms()) {
      std::vector<int> e(key.index.exponents());
      e.resize(target->nvars(), 0);
      e[d + static_cast<std::size_t>(key.channel)] = 1;
      g.add_term(MultiIndex(std::move(e)), c);
    }
    out.push_back(std::move(g));
  }
  return out;
}

template std::vector<QPoly> linear_to_quadratic(std::span<const QPoly>);
template std::vector<GPoly> linear_to_quadratic(std::span<const GPoly>);
template std::vector<CPoly> linear_to_quadratic(std::span<const CPoly>);

Eigen::MatrixXcd embedding_block(std::size_t nvars, int channels, int n) {
  const GradedBasis source(nvars, channels, n);
  const GradedBasis target(nvars + static_cast<std::size_t>(channels), 1, n + 1);
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(target.size(), source.size());
  for (Eigen::Index k = 0; k < source.size(); ++k) {
    std::vector<int> e(source.monomial(k).exponents());
    e.resize(nvars + static_cast<std::size_t>(channels), 0);
    e[nvars + static_cast<std::size_t>(source.channel(k))] = 1;
    const MultiIndex gamma(std::move(e));
    // sqrt(1 + n) z^alpha y_j, written in the orthonormal target basis
    u(target.index_of(gamma, 0), k) = std::sqrt(static_cast<double>(n + 1)) * monomial_norm(gamma) / source.norm(k);
  }
  return u;
}

double verify_isometry(std::size_t nvars, int channels, int cap) {
  double worst = 0.0;
  for (int n = 0; n <= cap; ++n) {
    const Eigen::MatrixXcd u = embedding_block(nvars, channels, n);
    for (Eigen::Index k = 0; k < u.cols(); ++k) worst = std::max(worst, std::abs(u.col(k).norm() - 1.0));
    const Eigen::MatrixXcd gram = u.adjoint() * u;
    worst = std::max(worst, operator_norm(gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())));
  }
  return worst;
}

double verify_shift_relation(std::size_t nvars, int channels, int cap) {
  const std::size_t big = nvars + static_cast<std::size_t>(channels);
  double worst = 0.0;
  for (int n = 0; n <= cap; ++n) {
    const Eigen::MatrixXcd u0 = embedding_block(nvars, channels, n);
    const Eigen::MatrixXcd u1 = embedding_block(nvars, channels, n + 1);
    const double factor = std::sqrt(static_cast<double>(n + 1) / static_cast<double>(n + 2));
    for (std::size_t i = 1; i <= nvars; ++i) {
      const Eigen::MatrixXcd lhs = u1.adjoint() * shift_block(big, 1, i, n + 1) * u0;
      const Eigen::MatrixXcd rhs = factor * shift_block(nvars, channels, i, n);
      worst = std::max(worst, max_column_norm(lhs - rhs));
    }
  }
  return worst;
}

double ReducingCheck::max_residual() const {
  return std::max({p_invariance, complement_invariance, complement_y_degree});
}

namespace {

// Frames of the quadratic module N and of its y-degree-one part P.
// Range of a with singular values above an absolute cutoff. Used on
// residuals of orthonormal frames, where a relative cutoff would keep
// rounding noise when the residual vanishes.
Eigen::MatrixXcd range_above(const Eigen::MatrixXcd& a, double cutoff) {
  const double top = operator_norm(a);
  if (top <= cutoff) return Eigen::MatrixXcd(a.rows(), 0);
  return orthonormal_range(a, cutoff / top);
}

struct QuadraticFrames {
  std::size_t nvars = 0;  // d + r
  std::vector<Eigen::MatrixXcd> n_basis;
  std::vector<Eigen::MatrixXcd> p_basis;
  std::vector<Eigen::MatrixXcd> q_basis;  // N minus P
};

QuadraticFrames quadratic_frames(std::span<const CPoly> linear, int cap, double rel_tol) {
  if (linear.empty()) throw PreconditionError("at least one linear generator is required");
  const std::size_t d = linear.front().nvars();
  const auto quad = linear_to_quadratic(linear);
  QuadraticFrames out;
  out.nvars = quad.front().nvars();
  const ModuleFrame n_frame = module_frame(quad, out.nvars, 1, cap, rel_tol);
  for (int n = 0; n <= cap; ++n) {
    const GradedBasis basis(out.nvars, 1, n);
    // z^gamma g_m with gamma over the original variables only
    std::vector<Eigen::VectorXcd> cols;
    if (n >= 2) {
      for (const auto& gamma : monomials_of_degree(d, n - 2)) {
        std::vector<int> e(gamma.exponents());
        e.resize(out.nvars, 0);
        const MultiIndex shift(std::move(e));
        for (const auto& g : quad) cols.push_back(to_coordinates(g.times_monomial(shift, Complex(1.0)), basis));
      }
    }
    Eigen::MatrixXcd span(basis.size(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k) span.col(static_cast<Eigen::Index>(k)) = cols[k];
    const Eigen::MatrixXcd p = orthonormal_range(span, rel_tol);
    const Eigen::MatrixXcd& nb = n_frame.module_basis(n);
    const Eigen::MatrixXcd rest = nb - p * (p.adjoint() * nb);
    out.n_basis.push_back(nb);
    out.p_basis.push_back(p);
    out.q_basis.push_back(range_above(rest, 1e-8));
  }
  return out;
}

double invariance_defect(const Eigen::MatrixXcd& z, const Eigen::MatrixXcd& from, const Eigen::MatrixXcd& to) {
  if (from.cols() == 0) return 0.0;
  const Eigen::MatrixXcd image = z * from;
  return operator_norm(image - to * (to.adjoint() * image));
}

}  // namespace

ReducingCheck verify_reducing(std::span<const CPoly> linear_generators, int cap, double rel_tol) {
  const QuadraticFrames fr = quadratic_frames(linear_generators, cap, rel_tol);
  const std::size_t d = linear_generators.front().nvars();
  ReducingCheck check;
  for (int n = 0; n < cap; ++n) {
    for (std::size_t i = 1; i <= d; ++i) {
      const Eigen::MatrixXcd z = shift_block(fr.nvars, 1, i, n);
      const auto k = static_cast<std::size_t>(n);
      check.p_invariance = std::max(check.p_invariance, invariance_defect(z, fr.p_basis[k], fr.p_basis[k + 1]));
      check.complement_invariance =
          std::max(check.complement_invariance, invariance_defect(z, fr.q_basis[k], fr.q_basis[k + 1]));
    }
  }
  for (int n = 0; n <= cap; ++n) {
    const GradedBasis basis(fr.nvars, 1, n);
    const auto& q = fr.q_basis[static_cast<std::size_t>(n)];
    for (Eigen::Index row = 0; row < basis.size(); ++row) {
      const MultiIndex& m = basis.monomial(row);
      int y_degree = 0;
      for (std::size_t v = d; v < fr.nvars; ++v) y_degree += m[v];
      if (y_degree != 1 || q.cols() == 0) continue;
      check.complement_y_degree = std::max(check.complement_y_degree, q.row(row).cwiseAbs().maxCoeff());
    }
  }
  return check;
}

double d_multiplier(int n) {
  if (n < 1) throw ValidationError("D is defined on degrees n >= 1");
  return std::sqrt(static_cast<double>(n + 1)) / std::sqrt(static_cast<double>(n));
}

double dprime_multiplier(int n) {
  if (n < 1) throw ValidationError("D' is defined on degrees n >= 1");
  return std::sqrt(static_cast<double>(n - 1) * static_cast<double>(n + 1)) / static_cast<double>(n);
}

ReductionReport reduce_linear_module(std::span<const CPoly> linear_generators, int cap) {
  if (linear_generators.empty()) throw PreconditionError("at least one linear generator is required");
  if (cap < 4) throw ValidationError("the reduction identities need a degree cap of at least 4");
  const std::size_t d = linear_generators.front().nvars();
  const int r = linear_generators.front().channels();
  const std::size_t big = d + static_cast<std::size_t>(r);

  ReductionReport report;
  report.cap = cap;
  report.isometry_residual = verify_isometry(d, r, cap - 1);
  report.relation_residual = verify_shift_relation(d, r, cap - 1);
  report.reducing = verify_reducing(linear_generators, cap);

  const ModuleFrame m = module_frame(linear_generators, d, r, cap, 1e-9);
  const QuadraticFrames fr = quadratic_frames(linear_generators, cap, 1e-9);

  for (int n = 0; n + 1 <= cap; ++n) {
    // U maps M_n onto P_{n+1}
    const Eigen::MatrixXcd um = embedding_block(d, r, n) * m.module_basis(n);
    const auto& p = fr.p_basis[static_cast<std::size_t>(n + 1)];
    double onto = um.cols() > 0 ? operator_norm(um - p * (p.adjoint() * um)) : 0.0;
    if (p.cols() > 0) onto = std::max(onto, operator_norm(p - um * (um.adjoint() * p)));
    report.onto_residual = std::max(report.onto_residual, onto);
  }

  for (int n = 2; n <= cap - 2; ++n) {
    const Eigen::MatrixXcd& qm = m.module_basis(n);
    if (qm.cols() == 0) continue;
    const Eigen::MatrixXcd u0 = embedding_block(d, r, n);
    const Eigen::MatrixXcd u1 = embedding_block(d, r, n + 1);
    const auto& p2 = fr.p_basis[static_cast<std::size_t>(n + 2)];
    for (std::size_t i = 1; i <= d; ++i) {
      // B_i = Z_i compressed to P
      const Eigen::MatrixXcd b = p2 * (p2.adjoint() * (shift_block(big, 1, i, n + 1) * (u0 * qm)));
      const Eigen::MatrixXcd ubu = u1.adjoint() * b;
      const Eigen::MatrixXcd t = shift_block(d, r, i, n) * qm;
      const Eigen::MatrixXcd lhs = d_multiplier(n + 1) * ubu;
      report.intertwining_residual = std::max(report.intertwining_residual, operator_norm(lhs - t));
      const Eigen::MatrixXcd rhs = dprime_multiplier(n + 1) * ubu * d_multiplier(n);
      report.dprime_residual = std::max(report.dprime_residual, operator_norm(lhs - rhs));
    }
  }
  for (int n = 2; n <= cap; ++n) {
    const double dp = dprime_multiplier(n);
    report.defect_residual = std::max(report.defect_residual, std::abs(1.0 - dp * dp - 1.0 / (static_cast<double>(n) * n)));
  }
  return report;
}

}  // namespace stabdiv
