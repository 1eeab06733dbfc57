#include "stabdiv/norms.hpp"

namespace stabdiv {

FactorialTable::FactorialTable(int cap) {
  if (cap < 0) throw ValidationError("factorial cap must be non-negative");
  table_.reserve(static_cast<std::size_t>(cap) + 1);
  table_.emplace_back(1);
  for (int k = 1; k <= cap; ++k) table_.push_back(table_.back() * k);
}

const Integer& FactorialTable::operator()(int n) const {
  if (n < 0 || n > cap()) throw ValidationError("factorial argument outside the memo table");
  return table_[static_cast<std::size_t>(n)];
}

Integer FactorialTable::factorial(int n) const {
  if (n < 0) throw ValidationError("factorial of a negative number");
  if (n <= cap()) return table_[static_cast<std::size_t>(n)];
  Integer out = table_.back();
  for (int k = cap() + 1; k <= n; ++k) out *= k;
  return out;
}

const FactorialTable& default_factorials() {
  static const FactorialTable table(64);
  return table;
}

Rational monomial_norm_sq(const MultiIndex& alpha) {
  const auto& f = default_factorials();
  Integer num = 1;
  for (int e : alpha.exponents()) num *= f.factorial(e);
  Rational out(num, f.factorial(alpha.degree()));
  out.canonicalize();
  return out;
}

double monomial_norm(const MultiIndex& alpha) { return std::sqrt(to_double(monomial_norm_sq(alpha))); }

Rational l1_norm(const QPoly& p) {
  Rational total = 0;
  for (const auto& [key, c] : p.terms()) total += abs(c);
  return total;
}

double l1_norm(const CPoly& p) {
  double total = 0.0;
  for (const auto& [key, c] : p.terms()) total += std::abs(c);
  return total;
}

double l1_norm(const GPoly& p) {
  double total = 0.0;
  for (const auto& [key, c] : p.terms()) total += std::abs(to_complex(c));
  return total;
}

std::optional<Rational> l1_norm_exact(const GPoly& p) {
  Rational total = 0;
  for (const auto& [key, c] : p.terms()) {
    if (sgn(c.imag()) == 0) {
      total += abs(c.real());
    } else if (sgn(c.real()) == 0) {
      total += abs(c.imag());
    } else {
      return std::nullopt;
    }
  }
  return total;
}

}  // namespace stabdiv
