#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace stabdiv {

/// Exponent vector of a monomial z^alpha in d variables.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t nvars) : exps_(nvars, 0) {}
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents) : MultiIndex(std::vector<int>(exponents)) {}

  /// e_j, the exponent of the coordinate function z_j.
  static MultiIndex unit(std::size_t nvars, std::size_t j);

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const;

  /// Componentwise alpha <= beta, i.e. z^alpha divides z^beta.
  bool divides(const MultiIndex& other) const;

  MultiIndex& operator+=(const MultiIndex& other);
  /// Requires other.divides(*this).
  MultiIndex& operator-=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  friend MultiIndex operator-(MultiIndex a, const MultiIndex& b) { return a -= b; }

  /// Copy with exponent j changed by delta (must stay non-negative).
  MultiIndex shifted(std::size_t j, int delta) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Storage order (plain lexicographic on the exponent vector); unrelated to
  /// any monomial order.
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> exps_;
};

MultiIndex lcm(const MultiIndex& a, const MultiIndex& b);
bool coprime(const MultiIndex& a, const MultiIndex& b);

/// All exponent vectors of total degree n in nvars variables, with the first
/// variable's exponent descending (x^n, x^{n-1}y, ..., y^n for d = 2).
std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, int n);

/// Number of monomials of degree n in nvars variables.
std::size_t count_monomials(std::size_t nvars, int n);

}  // namespace stabdiv
