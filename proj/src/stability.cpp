#include "stabdiv/stability.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include <Eigen/Dense>

#include "stabdiv/graded.hpp"

namespace stabdiv {

namespace {

// Minimum-norm least-squares solution of a x = b with a relative rank cutoff.
Eigen::VectorXcd pinv_solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b, double rel_tol) {
  if (a.cols() == 0) return Eigen::VectorXcd(0);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Eigen::VectorXcd coeffs = svd.matrixU().adjoint() * b;
  const double cutoff = s.size() > 0 ? rel_tol * s(0) : 0.0;
  for (Eigen::Index k = 0; k < s.size(); ++k) coeffs(k) = s(k) > cutoff ? coeffs(k) / s(k) : Complex(0.0);
  return svd.matrixV() * coeffs;
}

void require_homogeneous(std::span<const CPoly> generators) {
  for (const auto& f : generators) {
    if (f.is_zero() || !f.is_homogeneous()) throw PreconditionError("generators must be nonzero and homogeneous");
  }
}

}  // namespace

StableDecomposition<Complex> orthonormal_linear_decompose(const CPoly& h, std::span<const CPoly> generators,
                                                          double orthonormality_tol, double membership_tol) {
  const std::size_t d = h.nvars();
  const std::size_t k = generators.size();
  if (!h.is_scalar()) throw UnsupportedError("orthonormal linear decomposition is for scalar polynomials");
  if (k > d) throw PreconditionError("more orthonormal linear forms than variables");

  // rows of v are the coefficient vectors of the f_i; <f_i, f_j> = v_i . conj(v_j)
  Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& f = generators[i];
    h.require_compatible(f);
    if (!f.is_scalar() || f.total_degree() != 1 || f.min_degree() != 1) {
      throw PreconditionError("generator f" + std::to_string(i + 1) + " is not a linear form");
    }
    for (const auto& [key, c] : f.terms()) {
      for (std::size_t j = 0; j < d; ++j) {
        if (key.index[j] == 1) v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c;
      }
    }
  }
  const Eigen::MatrixXcd gram = v * v.adjoint();
  const double defect = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  if (k > 0 && defect > orthonormality_tol) {
    throw PreconditionError("linear generators are not H2-orthonormal (defect " + format_double(defect) + ")");
  }

  // unitary w with the v_i as its first rows; new coordinates u = w z make f_i = u_i
  const Eigen::MatrixXcd cols = v.adjoint();
  Eigen::MatrixXcd full(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  full << cols, orthogonal_complement(cols, static_cast<Eigen::Index>(d));
  const Eigen::MatrixXcd w = full.adjoint();
  const Eigen::MatrixXcd w_inv = w.adjoint();

  auto as_coeffs = [d](const Eigen::MatrixXcd& m) {
    CoeffMatrix<Complex> out(d, std::vector<Complex>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) out[i][j] = m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    return out;
  };

  // h(z) = h(w^* u)
  double scale = 0.0;
  for (const auto& [key, c] : h.terms()) scale = std::max(scale, std::abs(c));
  const CPoly moved = chop(substitute_linear(h, as_coeffs(w_inv)), 1e-15 * std::max(scale, 1.0));

  const auto scalar = h.shared_ambient();
  std::vector<CPoly> local(k, CPoly(scalar));
  CPoly outside(scalar);
  for (const auto& [key, c] : moved.terms()) {
    bool placed = false;
    for (std::size_t i = 0; i < k && !placed; ++i) {
      if (key.index[i] == 0) continue;
      local[i].add_term(key.index.shifted(i, -1), c);
      placed = true;
    }
    if (!placed) outside.add_term(key.index, c);
  }
  const double h_norm = h2_norm(h);
  if (h2_norm(outside) > membership_tol * std::max(h_norm, 1e-300)) {
    throw MembershipError("h is not in the ideal generated by the linear forms");
  }

  StableDecomposition<Complex> dec;
  for (std::size_t i = 0; i < k; ++i) dec.quotients.push_back(substitute_linear(local[i], as_coeffs(w)));
  dec.certificate = "orthogonal-parts";
  compute_costs(dec, generators);
  return dec;
}

template <Coefficient K>
StableDecomposition<K> monomial_module_decompose(const Polynomial<K>& h, std::span<const Term<K>> generators) {
  if (!h.is_homogeneous()) throw PreconditionError("monomial module decomposition needs homogeneous h");
  for (const auto& g : generators) {
    if (coeff_is_zero(g.coeff)) throw ZeroPolynomialError("zero monomial generator");
    if (g.index.size() != h.nvars() || g.channel < 0 || g.channel >= h.channels()) {
      throw DimensionError("monomial generator does not live in the ambient of h");
    }
  }
  const Ambient scalar = h.ambient().with_channels(1);
  StableDecomposition<K> dec;
  dec.quotients.assign(generators.size(), Polynomial<K>(scalar));
  for (const auto& [key, c] : h.terms()) {
    bool claimed = false;
    for (std::size_t i = 0; i < generators.size() && !claimed; ++i) {
      const auto& g = generators[i];
      if (g.channel != key.channel || !g.index.divides(key.index)) continue;
      dec.quotients[i].add_term(key.index - g.index, K(c / g.coeff));
      claimed = true;
    }
    if (!claimed) throw MembershipError("a term of h is not divisible by any generator in its channel");
  }
  const auto polys = monomial_generators(h.ambient(), generators);
  compute_costs(dec, std::span<const Polynomial<K>>(polys));
  dec.certificate = "disjoint-supports";
  return dec;
}

template StableDecomposition<Rational> monomial_module_decompose(const QPoly&, std::span<const Term<Rational>>);
template StableDecomposition<GaussianRational> monomial_module_decompose(const GPoly&,
                                                                         std::span<const Term<GaussianRational>>);
template StableDecomposition<Complex> monomial_module_decompose(const CPoly&, std::span<const Term<Complex>>);

BivariateDivision bivariate_stable_divide(const QPoly& h, std::span<const QPoly> generators) {
  return bivariate_stable_divide(h, generators, MonomialOrder::graded_lex(h.nvars()));
}

BivariateDivision bivariate_stable_divide(const QPoly& h, std::span<const QPoly> generators,
                                          const MonomialOrder& order) {
  if (h.nvars() != 2) throw UnsupportedError("bivariate stable division needs exactly two variables");
  if (!order.is_graded()) throw PreconditionError("bivariate stable division runs under a graded order");
  int m = -1;
  for (const auto& f : generators) {
    if (f.is_zero() || !f.is_homogeneous()) throw PreconditionError("generators must be nonzero and homogeneous");
    if (m >= 0 && f.total_degree() != m) throw PreconditionError("generators must share one degree");
    m = f.total_degree();
  }

  std::vector<std::size_t> perm(generators.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return order.less(leading_monomial(generators[b], order), leading_monomial(generators[a], order));
  });
  std::vector<QPoly> sorted;
  for (std::size_t i : perm) sorted.push_back(generators[i]);

  BivariateDivision out{{}, QPoly(h.shared_ambient()), 0, 0, perm,
                        divide(h, std::span<const QPoly>(sorted), order, Strategy::bivariate_stable())};
  out.decomposition.quotients.assign(generators.size(), QPoly(h.shared_ambient()));
  for (std::size_t pos = 0; pos < perm.size(); ++pos) out.decomposition.quotients[perm[pos]] = out.division.quotients[pos];
  out.remainder = out.division.remainder;
  out.h_norm_sq = h2_norm_sq(h);
  out.remainder_norm_sq = h2_norm_sq(out.remainder);
  compute_costs(out.decomposition, generators);
  out.decomposition.certificate = "bivariate-max-index";
  return out;
}

Rational dominance_ratio(std::span<const QPoly> generators, const MonomialOrder& order) {
  Rational worst = 0;
  for (const auto& f : generators) {
    const Term<Rational> lt = leading_term(f, order);
    Rational rest = l1_norm(f) - abs(lt.coeff);
    rest /= abs(lt.coeff);
    if (rest > worst) worst = rest;
  }
  return worst;
}

std::optional<Rational> dominance_rho(std::span<const QPoly> generators, const MonomialOrder& order) {
  Rational rho = dominance_ratio(generators, order);
  if (rho < 1) return rho;
  return std::nullopt;
}

DominantDivision dominant_divide(const QPoly& h, std::span<const QPoly> generators, const MonomialOrder& order) {
  const auto rho = dominance_rho(generators, order);
  if (!rho) throw PreconditionError("leading coefficients do not dominate (rho >= 1)");

  std::vector<QPoly> normalized;
  std::vector<Rational> lc;
  for (const auto& f : generators) {
    lc.push_back(leading_term(f, order).coeff);
    normalized.push_back(f.scaled(Rational(1 / lc.back())));
  }

  DominantDivision out{{}, QPoly(h.shared_ambient()), *rho, l1_norm(h), 0, 0, 0, 0,
                       false, false, false, false, false,
                       divide(h, std::span<const QPoly>(normalized), order, Strategy::dominant_min_term(),
                              DivisionOptions{true})};
  out.remainder = out.division.remainder;
  out.remainder_l1 = l1_norm(out.remainder);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const QPoly& b = out.division.quotients[i];
    out.normalized_quotient_l1 += l1_norm(b);
    const QPoly a = b.scaled(Rational(1 / lc[i]));
    out.weighted_bound += l1_norm(a) * l1_norm(generators[i]);
    out.decomposition.quotients.push_back(a);
  }
  compute_costs(out.decomposition, generators);
  out.decomposition.certificate = "dominant-leading-terms";
  out.quotient_bound = out.h_l1 / (1 - out.rho);

  out.remainder_bound_holds = out.remainder_l1 <= out.h_l1;
  out.quotient_bound_holds = out.normalized_quotient_l1 <= out.quotient_bound;
  out.weighted_bound_holds = out.decomposition.cost_l1 <= out.weighted_bound;

  out.p_norm_monotone = true;
  Rational previous = out.h_l1;
  out.heights_decrease = true;
  for (const auto& step : out.division.trace) {
    const Rational now = l1_norm(*step.p_snapshot);
    if (now > previous) out.p_norm_monotone = false;
    previous = now;
    if (step.residual_leading) {
      if (!order.less(*step.residual_leading, step.term.index)) out.heights_decrease = false;
      if (step.term_height && step.residual_height && !(*step.residual_height < *step.term_height)) {
        out.heights_decrease = false;
      }
    }
  }

  if (!out.remainder_bound_holds) throw AssertionFailure("||r||_1 exceeds ||h||_1 in dominant division");
  if (!out.quotient_bound_holds) throw AssertionFailure("quotient l1 bound (1 - rho)^-1 ||h||_1 violated");
  return out;
}

LambdaRescaling rescale_lambdas(std::span<const QPoly> generators, const MonomialOrder& order) {
  const std::size_t d = order.nvars();
  LambdaRescaling out;
  out.coefficient_bound = 0;
  bool any_tail = false;
  for (const auto& f : generators) {
    if (f.is_zero()) throw ZeroPolynomialError("cannot rescale the zero polynomial");
    if (f.nvars() != d) throw DimensionError("order and generators disagree on variable count");
    out.max_degree = std::max(out.max_degree, f.total_degree());
    const Term<Rational> lt = leading_term(f, order);
    for (const auto& [key, c] : f.terms()) {
      if (key.index == lt.index) continue;
      any_tail = true;
      Rational ratio = abs(c / lt.coeff);
      Integer ceil_ratio;
      mpz_cdiv_q(ceil_ratio.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
      if (ceil_ratio > out.coefficient_bound) out.coefficient_bound = ceil_ratio;
    }
  }
  // M = C(N + d, d)
  Integer m = 1;
  for (std::size_t i = 1; i <= d; ++i) {
    m *= out.max_degree + static_cast<long>(i);
    m /= static_cast<long>(i);
  }
  out.monomial_count = m;

  if (!any_tail) {
    out.sequence.assign(d, Integer(1));
  } else {
    out.sequence.push_back(m * (out.coefficient_bound + 1));
    Integer product = out.sequence.front();
    for (std::size_t j = 1; j < d; ++j) {
      Integer next;
      mpz_pow_ui(next.get_mpz_t(), product.get_mpz_t(), static_cast<unsigned long>(out.max_degree + 1));
      out.sequence.push_back(next);
      product *= next;
    }
  }
  out.by_variable.assign(d, Integer(1));
  const auto& prio = order.priority();
  for (std::size_t k = 0; k < d; ++k) out.by_variable[prio[d - 1 - k]] = out.sequence[k];

  const std::vector<Rational> lambda = to_rationals(out.by_variable);
  std::vector<QPoly> scaled;
  for (const auto& f : generators) scaled.push_back(scale_variables(f, lambda));
  if (!dominance_rho(scaled, order)) {
    throw PreconditionError("rescaling does not make the leading terms dominant under " +
                            std::string(order.is_graded() ? "a graded" : "this") + " order");
  }
  return out;
}

std::vector<Rational> to_rationals(const std::vector<Integer>& values) {
  std::vector<Rational> out;
  for (const auto& v : values) out.emplace_back(v);
  return out;
}

GroebnerBasis rescale_ideal(const GroebnerBasis& basis, const std::vector<Rational>& lambda_by_variable) {
  if (lambda_by_variable.size() != basis.nvars()) throw DimensionError("one scaling factor per variable is required");
  for (const auto& l : lambda_by_variable) {
    if (sgn(l) == 0) throw ValidationError("scaling factors must be nonzero");
  }
  GroebnerBasis out{{}, basis.order, basis.reduced};
  for (const auto& g : basis.generators) out.generators.push_back(monic(scale_variables(g, lambda_by_variable), basis.order));
  if (!is_groebner_basis(out.generators, out.order)) {
    throw InternalConsistencyError("rescaled generators are no longer a Groebner basis");
  }
  return out;
}

StableDecomposition<Complex> min_cost_decomposition(const CPoly& h, std::span<const CPoly> generators, int n,
                                                    double rel_tol) {
  require_homogeneous(generators);
  if (!h.is_homogeneous() || (!h.is_zero() && h.total_degree() != n)) {
    throw PreconditionError("h must be homogeneous of degree " + std::to_string(n));
  }
  const GradedBasis target(h.nvars(), h.channels(), n);
  const Eigen::VectorXcd hv = to_coordinates(h, target);

  std::vector<Eigen::MatrixXcd> mult(generators.size());
  std::vector<Eigen::MatrixXcd> ranges(generators.size());
  Eigen::Index total = 0;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    h.require_compatible(generators[i]);
    const int s = n - generators[i].total_degree();
    if (s < 0) {
      ranges[i] = Eigen::MatrixXcd(target.size(), 0);
      continue;
    }
    mult[i] = multiplication_matrix(generators[i], s);
    ranges[i] = orthonormal_range(mult[i], rel_tol);
    total += ranges[i].cols();
  }
  Eigen::MatrixXcd synth(target.size(), total);
  Eigen::Index at = 0;
  for (const auto& q : ranges) {
    synth.middleCols(at, q.cols()) = q;
    at += q.cols();
  }
  const Eigen::VectorXcd c = pinv_solve(synth, hv, rel_tol);
  const double residual = total > 0 ? (synth * c - hv).norm() : hv.norm();
  if (residual > 1e-9 * std::max(hv.norm(), 1e-300)) throw MembershipError("h is not in M_n");

  StableDecomposition<Complex> dec;
  const Ambient scalar = h.ambient().with_channels(1);
  const auto scalar_ptr = std::make_shared<const Ambient>(scalar);
  at = 0;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Eigen::Index cols = ranges[i].cols();
    if (cols == 0) {
      dec.quotients.emplace_back(scalar_ptr);
      continue;
    }
    const Eigen::VectorXcd part = ranges[i] * c.segment(at, cols);
    at += cols;
    const Eigen::VectorXcd x = pinv_solve(mult[i], part, rel_tol);
    dec.quotients.push_back(from_coordinates(x, GradedBasis(h.nvars(), 1, n - generators[i].total_degree()), scalar_ptr));
  }
  compute_costs(dec, generators);
  dec.certificate = "minimal-norm";
  return dec;
}

namespace {

DegreeStability degree_stability(std::span<const CPoly> generators, std::size_t nvars, int channels, int n,
                                 double rel_tol) {
  const GradedBasis basis(nvars, channels, n);
  DegreeStability row;
  row.degree = n;
  row.dim_ambient = static_cast<std::size_t>(basis.size());
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
  for (const auto& f : generators) {
    const int s = n - f.total_degree();
    if (s < 0) continue;
    const Eigen::MatrixXcd q = orthonormal_range(multiplication_matrix(f, s), rel_tol);
    gram += q * q.adjoint();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& ev = eig.eigenvalues();
  row.eigen_max = ev.size() > 0 ? ev(ev.size() - 1) : 0.0;
  if (row.eigen_max <= 0.0) return row;
  const double cutoff = rel_tol * row.eigen_max;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev(k) <= cutoff) continue;
    ++row.dim_module;
    if (!row.eigen_min) row.eigen_min = ev(k);
  }
  row.constant = 1.0 / *row.eigen_min;
  return row;
}

}  // namespace

StabilityReport stability_constant_scan(std::span<const CPoly> generators, int n_min, int n_max, double rel_tol) {
  require_homogeneous(generators);
  if (generators.empty()) throw PreconditionError("stability scan needs at least one generator");
  if (n_min < 0 || n_max < n_min) throw ValidationError("invalid degree range");
  const std::size_t nvars = generators.front().nvars();
  const int channels = generators.front().channels();
  for (const auto& f : generators) generators.front().require_compatible(f);

  const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
  StabilityReport report;
  report.rows.resize(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      report.rows[k] = degree_stability(generators, nvars, channels, n_min + static_cast<int>(k), rel_tol);
    }
  };
  const std::size_t threads = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::optional<double> running;
  for (const auto& row : report.rows) {
    if (row.constant) running = std::max(running.value_or(*row.constant), *row.constant);
    report.envelope.push_back(running);
  }
  report.growth_exponent = fit_growth_exponent(report.rows);
  return report;
}

std::optional<double> fit_growth_exponent(const std::vector<DegreeStability>& rows) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : rows) {
    if (r.constant && r.degree > 0 && *r.constant > 0) pts.emplace_back(std::log(r.degree), std::log(*r.constant));
  }
  const std::size_t start = pts.size() / 2;
  if (pts.size() - start < 2) return std::nullopt;
  double mx = 0, my = 0;
  const double cnt = static_cast<double>(pts.size() - start);
  for (std::size_t k = start; k < pts.size(); ++k) {
    mx += pts[k].first;
    my += pts[k].second;
  }
  mx /= cnt;
  my /= cnt;
  double sxy = 0, sxx = 0;
  for (std::size_t k = start; k < pts.size(); ++k) {
    sxy += (pts[k].first - mx) * (pts[k].second - my);
    sxx += (pts[k].first - mx) * (pts[k].first - mx);
  }
  if (sxx == 0.0) return std::nullopt;
  return sxy / sxx;
}

}  // namespace stabdiv
