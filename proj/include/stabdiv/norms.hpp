#pragma once

// The l1 norm ||p|| = sum |c_alpha| and the H^2 (Drury-Arveson) inner
// product, in which monomials are orthogonal and ||z^alpha||^2 = alpha!/|alpha|!.
// Channels of A_d (x) C^r are orthonormal.

#include <cmath>
#include <optional>
#include <vector>

#include "stabdiv/polynomial.hpp"

namespace stabdiv {

enum class NormKind { l1, h2 };

/// Exact factorials, memoized up to `cap`; larger arguments are computed
/// on demand without caching. Immutable after construction.
class FactorialTable {
 public:
  explicit FactorialTable(int cap = 64);

  const Integer& operator()(int n) const;
  Integer factorial(int n) const;
  int cap() const { return static_cast<int>(table_.size()) - 1; }

 private:
  std::vector<Integer> table_;
};

const FactorialTable& default_factorials();

/// ||z^alpha||^2 = alpha_1! ... alpha_d! / |alpha|!.
Rational monomial_norm_sq(const MultiIndex& alpha);
double monomial_norm(const MultiIndex& alpha);

Rational l1_norm(const QPoly& p);
double l1_norm(const CPoly& p);
/// Float sum of |a + bi|; see l1_norm_exact for the exact variant.
double l1_norm(const GPoly& p);
/// Exact l1 norm when every coefficient is purely real or purely imaginary.
std::optional<Rational> l1_norm_exact(const GPoly& p);

template <Coefficient K>
norm_type_t<K> h2_norm_sq(const Polynomial<K>& p) {
  norm_type_t<K> total(0);
  for (const auto& [key, c] : p.terms()) {
    if constexpr (std::is_same_v<K, Complex>) {
      total += coeff_abs_sq(c) * to_double(monomial_norm_sq(key.index));
    } else {
      total += coeff_abs_sq(c) * monomial_norm_sq(key.index);
    }
  }
  return total;
}

template <Coefficient K>
double h2_norm(const Polynomial<K>& p) {
  return std::sqrt(to_double(h2_norm_sq(p)));
}

/// <p, q>, linear in p and conjugate-linear in q.
template <Coefficient K>
K h2_inner(const Polynomial<K>& p, const Polynomial<K>& q) {
  p.require_compatible(q);
  K total(0);
  const auto& small = p.size() <= q.size() ? p : q;
  const auto& large = p.size() <= q.size() ? q : p;
  for (const auto& [key, c] : small.terms()) {
    auto it = large.terms().find(key);
    if (it == large.terms().end()) continue;
    const K& pc = (&small == &p) ? c : it->second;
    const K& qc = (&small == &p) ? it->second : c;
    if constexpr (std::is_same_v<K, Complex>) {
      total += pc * coeff_conj(qc) * to_double(monomial_norm_sq(key.index));
    } else {
      total += K(pc * coeff_conj(qc)) * K(monomial_norm_sq(key.index));
    }
  }
  return total;
}

}  // namespace stabdiv
