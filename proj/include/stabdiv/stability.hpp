#pragma once

// Stable division procedures and the per-degree stability-constant oracle.
//
// A generating set f_1..f_k of a module M is stable with constant C if every
// h in M can be written h = sum a_i f_i with sum ||a_i f_i||^2 <= C ||h||^2.
// The constructive procedures below each produce such decompositions for a
// class of modules; the oracle computes the best possible constant degree by
// degree.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stabdiv/division.hpp"
#include "stabdiv/groebner.hpp"
#include "stabdiv/norms.hpp"
#include "stabdiv/polynomial.hpp"

namespace stabdiv {

template <Coefficient K>
struct StableDecomposition {
  std::vector<Polynomial<K>> quotients;
  /// sum ||a_i f_i||^2 in H^2.
  norm_type_t<K> cost_sq{0};
  /// sum ||a_i f_i|| in H^2.
  double cost_norm_sum = 0.0;
  /// sum ||a_i f_i||_1.
  norm_type_t<K> cost_l1{0};
  /// Name of the bound the decomposition is certified against.
  std::string certificate;
};

/// Fills the three cost fields from the quotients and generators.
template <Coefficient K>
void compute_costs(StableDecomposition<K>& dec, std::span<const Polynomial<K>> generators) {
  dec.cost_sq = norm_type_t<K>(0);
  dec.cost_l1 = norm_type_t<K>(0);
  dec.cost_norm_sum = 0.0;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Polynomial<K> part = poly_mul(dec.quotients[i], generators[i]);
    const norm_type_t<K> sq = h2_norm_sq(part);
    dec.cost_sq += sq;
    dec.cost_norm_sum += std::sqrt(to_double(sq));
    dec.cost_l1 += l1_norm(part);
  }
}

/// Ideals generated by an H^2-orthonormal set of linear forms: the parts
/// a_i f_i are pairwise orthogonal, so sum ||a_i f_i||^2 = ||h||^2.
///
/// The coefficient vectors of the f_i are completed to a unitary U; in the
/// coordinates w = U z the generators are w_1..w_k, and h is split by
/// collecting the monomials containing w_1, then those containing w_2, and so
/// on. The quotients are mapped back with z -> U z.
StableDecomposition<Complex> orthonormal_linear_decompose(const CPoly& h, std::span<const CPoly> generators,
                                                          double orthonormality_tol = 1e-12,
                                                          double membership_tol = 1e-9);

/// Modules generated by monomials c z^alpha (x) e_j, with constant 1.
///
/// Generators are processed in the given order; each claims every remaining
/// term of h in its channel whose multi-index dominates alpha componentwise.
/// The parts a_i f_i then have disjoint supports, so sum ||a_i f_i||^2 equals
/// ||h||^2 exactly. h must be homogeneous; repeated (alpha, channel) pairs
/// receive zero quotients.
template <Coefficient K>
StableDecomposition<K> monomial_module_decompose(const Polynomial<K>& h, std::span<const Term<K>> generators);

template <Coefficient K>
std::vector<Polynomial<K>> monomial_generators(const Ambient& ambient, std::span<const Term<K>> generators) {
  std::vector<Polynomial<K>> out;
  for (const auto& t : generators) out.push_back(Polynomial<K>::from_term(ambient, t));
  return out;
}

struct BivariateDivision {
  /// Quotients follow the caller's generator order.
  StableDecomposition<Rational> decomposition;
  QPoly remainder;
  Rational h_norm_sq;
  Rational remainder_norm_sq;
  /// generator index (caller's order) of the i-th divisor actually used.
  std::vector<std::size_t> divisor_order;
  DivisionResult<Rational> division;
};

/// Two-variable stable division: Algorithm I with the highest admissible
/// divisor index, after sorting the equal-degree homogeneous generators so
/// that LT(f_1) > ... > LT(f_k) under graded-lex. When F is a Groebner basis
/// and h lies in the ideal, the remainder is zero.
BivariateDivision bivariate_stable_divide(const QPoly& h, std::span<const QPoly> generators);
BivariateDivision bivariate_stable_divide(const QPoly& h, std::span<const QPoly> generators,
                                          const MonomialOrder& order);

/// max_j sum_{alpha != beta_j} |c_alpha| / |c_beta_j| where c_beta_j z^beta_j = LT(f_j).
Rational dominance_ratio(std::span<const QPoly> generators, const MonomialOrder& order);

/// The ratio above when it is < 1 (leading terms dominate), nullopt otherwise.
std::optional<Rational> dominance_rho(std::span<const QPoly> generators, const MonomialOrder& order);

struct DominantDivision {
  /// Quotients for the caller's generators.
  StableDecomposition<Rational> decomposition;
  QPoly remainder;
  Rational rho;
  Rational h_l1;
  Rational remainder_l1;
  /// sum ||a_i||_1 for the monic-normalized generators.
  Rational normalized_quotient_l1;
  /// (1 - rho)^{-1} ||h||_1.
  Rational quotient_bound;
  /// sum ||a_i||_1 ||f_i||_1 for the caller's generators; bounds cost_l1.
  Rational weighted_bound;
  bool remainder_bound_holds = false;
  bool quotient_bound_holds = false;
  bool weighted_bound_holds = false;
  /// ||p||_1 never increased across the trace.
  bool p_norm_monotone = false;
  /// Each reduction's residual is strictly below the reduced term.
  bool heights_decrease = false;
  DivisionResult<Rational> division;

  bool all_bounds_hold() const {
    return remainder_bound_holds && quotient_bound_holds && weighted_bound_holds && p_norm_monotone &&
           heights_decrease;
  }
};

/// Division by generators whose leading coefficient dominates the rest
/// (rho < 1) with the DOMINANT_MIN_TERM strategy. Guarantees
/// ||r||_1 <= ||h||_1 and sum ||a_i||_1 <= (1 - rho)^{-1} ||h||_1 for the
/// monic-normalized generators; throws AssertionFailure if either fails and
/// PreconditionError if the generators are not dominant.
DominantDivision dominant_divide(const QPoly& h, std::span<const QPoly> generators, const MonomialOrder& order);

struct LambdaRescaling {
  /// lambda_1 = M (K + 1), lambda_{j+1} = (lambda_1 ... lambda_j)^{N + 1}.
  std::vector<Integer> sequence;
  /// sequence[0] goes to the lowest-priority variable, sequence[d-1] to the
  /// highest; indexed by variable here.
  std::vector<Integer> by_variable;
  int max_degree = 0;           // N
  Integer monomial_count;       // M = dim of polynomials of degree <= N
  Integer coefficient_bound;    // K
};

/// Scaling factors making every leading coefficient dominate after
/// z_i -> lambda_i z_i. K is the ceiling of the largest |c / LC(f)| so that the
/// construction also covers non-monic input. Monomial-only input yields all
/// ones. The result is post-checked with dominance_rho; PreconditionError if a
/// graded order with non-homogeneous generators defeats the construction.
LambdaRescaling rescale_lambdas(std::span<const QPoly> generators, const MonomialOrder& order);

std::vector<Rational> to_rationals(const std::vector<Integer>& values);

/// Substitutes z_i -> lambda_i z_i in every generator and normalizes to monic.
/// The result is checked with is_groebner_basis; InternalConsistencyError if
/// that fails.
GroebnerBasis rescale_ideal(const GroebnerBasis& basis, const std::vector<Rational>& lambda_by_variable);

/// Replaces each f_i of degree m_i < m = max degree by the products
/// z^gamma f_i, |gamma| = m - m_i, giving a generating set of equal degree for
/// M_m + M_{m+1} + ...
template <Coefficient K>
std::vector<Polynomial<K>> equalize_degrees(std::span<const Polynomial<K>> generators) {
  int m = -1;
  for (const auto& f : generators) {
    if (!f.is_homogeneous() || f.is_zero()) throw PreconditionError("equalize_degrees needs nonzero homogeneous generators");
    m = std::max(m, f.total_degree());
  }
  std::vector<Polynomial<K>> out;
  for (const auto& f : generators) {
    const int gap = m - f.total_degree();
    for (const auto& gamma : monomials_of_degree(f.nvars(), gap)) out.push_back(f.times_monomial(gamma, K(1)));
  }
  return out;
}

/// Minimal sum ||a_i f_i||^2 over all decompositions h = sum a_i f_i with
/// h homogeneous of degree n: the minimum-norm preimage of h under the
/// synthesis map S : (+)_i f_i H_{n - m_i} -> H_n, (u_i) -> sum u_i.
StableDecomposition<Complex> min_cost_decomposition(const CPoly& h, std::span<const CPoly> generators, int n,
                                                    double rel_tol = 1e-9);

struct DegreeStability {
  int degree = 0;
  std::size_t dim_module = 0;
  std::size_t dim_ambient = 0;
  /// C_n = 1 / lambda_min(S S^* restricted to M_n); absent when M_n = 0.
  std::optional<double> constant;
  std::optional<double> eigen_min;
  double eigen_max = 0.0;
};

struct StabilityReport {
  std::vector<DegreeStability> rows;
  /// Running maximum of C_n (absent entries carry the previous maximum).
  std::vector<std::optional<double>> envelope;
  /// Least-squares slope of log C_n against log n over the top half of the
  /// degrees with C_n present; absent with fewer than two points.
  std::optional<double> growth_exponent;
};

/// Per-degree stability constants for n = n_min..n_max. Degrees are
/// independent eigenproblems and are evaluated concurrently.
StabilityReport stability_constant_scan(std::span<const CPoly> generators, int n_min, int n_max,
                                        double rel_tol = 1e-9);

std::optional<double> fit_growth_exponent(const std::vector<DegreeStability>& rows);

}  // namespace stabdiv
