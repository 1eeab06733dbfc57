#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stabdiv/ordering.hpp"
#include "stabdiv/polynomial.hpp"

namespace stabdiv {

struct GroebnerBasis {
  std::vector<QPoly> generators;
  MonomialOrder order;
  /// Monic, with no term of any generator divisible by another's leading term.
  bool reduced = false;

  std::size_t nvars() const { return order.nvars(); }
  std::vector<MultiIndex> leading_monomials() const;
};

/// (L / LT f) f - (L / LT g) g with L = lcm(LM f, LM g); the leading terms cancel.
QPoly s_polynomial(const QPoly& f, const QPoly& g, const MonomialOrder& order);

/// Reduced Groebner basis of <F>: Buchberger with the normal pair-selection
/// strategy (smallest lcm degree first) and both Buchberger criteria.
/// Output is sorted by leading monomial, largest first.
GroebnerBasis buchberger(std::span<const QPoly> generators, const MonomialOrder& order);

/// True iff every S-pair of F reduces to zero modulo F (zero entries ignored).
bool is_groebner_basis(std::span<const QPoly> generators, const MonomialOrder& order);

/// Remainder of h on division by the basis; zero iff h lies in the ideal.
QPoly normal_form(const QPoly& h, const GroebnerBasis& basis);

/// f / LC(f) under the order.
QPoly monic(const QPoly& f, const MonomialOrder& order);

/// Degree-n monomials not divisible by any leading monomial of the basis,
/// largest first. Their number is dim(M_n^perp) = dim(H_n / I_n).
/// Requires homogeneous generators.
std::vector<MultiIndex> standard_monomials(const GroebnerBasis& basis, int n);

std::size_t hilbert_function(const GroebnerBasis& basis, int n);

/// Every variable has a pure power among the leading monomials.
bool is_zero_dimensional(const GroebnerBasis& basis);

/// deg(HP) + 1 for the Hilbert polynomial HP interpolated from the window
/// n0 .. n0 + d + 2, where n0 defaults to (max generator degree) + d. Returns
/// 0 when HP vanishes identically. Throws WindowTooSmallError if the sampled
/// values are not yet polynomial of degree < d.
int hilbert_dimension(const GroebnerBasis& basis, std::optional<int> window_start = std::nullopt);

/// Degree + 1 of the polynomial through consecutive Hilbert-function values
/// (0 for all-zero values). `nvars` bounds the admissible degree by nvars - 1.
/// `window_start` is used only for the error message.
int hilbert_dimension_from_values(std::span<const long> values, std::size_t nvars, int window_start);

}  // namespace stabdiv
