#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stabdiv/polynomial.hpp"

namespace stabdiv {

enum class OrderKind { graded_lex, lex };

/// Graded-lex or pure-lex monomial order with an explicit variable priority.
///
/// `priority` lists variable indices from highest to lowest. Graded-lex
/// compares total degree first and breaks ties lexicographically in priority
/// order; lex skips the degree comparison.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority);

  /// Priority z_1 > z_2 > ... > z_d (declaration order).
  static MonomialOrder graded_lex(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);

  /// Parses `grlex:x>y`, `lex:w>x>y`, or a bare `grlex` / `lex` (declaration
  /// order). Every declared variable must appear exactly once.
  static MonomialOrder parse(std::string_view spec, const Ambient& ambient);

  OrderKind kind() const { return kind_; }
  bool is_graded() const { return kind_ == OrderKind::graded_lex; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  std::size_t nvars() const { return priority_.size(); }

  std::strong_ordering compare(const MultiIndex& a, const MultiIndex& b) const;
  bool less(const MultiIndex& a, const MultiIndex& b) const { return compare(a, b) < 0; }

  std::string to_string(const Ambient& ambient) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> priority_;
};

/// Comparator sorting descending under the order (largest first).
struct DescendingBy {
  const MonomialOrder* order;
  bool operator()(const MultiIndex& a, const MultiIndex& b) const { return order->less(b, a); }
};

/// The order-maximal term. Vector-valued ties between channels sharing the
/// maximal multi-index go to the lowest channel.
template <Coefficient K>
Term<K> leading_term(const Polynomial<K>& p, const MonomialOrder& order) {
  if (p.is_zero()) throw ZeroPolynomialError("leading term of the zero polynomial");
  if (order.nvars() != p.nvars()) throw DimensionError("order and polynomial disagree on variable count");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it) {
    const auto cmp = order.compare(it->first.index, best->first.index);
    if (cmp > 0 || (cmp == 0 && it->first.channel < best->first.channel)) best = it;
  }
  return {best->second, best->first.index, best->first.channel};
}

template <Coefficient K>
MultiIndex leading_monomial(const Polynomial<K>& p, const MonomialOrder& order) {
  return leading_term(p, order).index;
}

/// Terms sorted by the order, largest first, channel ascending on ties.
template <Coefficient K>
std::vector<Term<K>> sorted_terms(const Polynomial<K>& p, const MonomialOrder& order) {
  std::vector<Term<K>> out = p.term_list();
  std::stable_sort(out.begin(), out.end(), [&](const Term<K>& a, const Term<K>& b) {
    const auto cmp = order.compare(a.index, b.index);
    if (cmp != 0) return cmp > 0;
    return a.channel < b.channel;
  });
  return out;
}

/// |{beta : beta <= gamma}| under a graded order. Lex orders have infinitely
/// many predecessors for most gamma, so nullopt is returned for them.
std::optional<std::uint64_t> height(const MonomialOrder& order, const MultiIndex& gamma);

}  // namespace stabdiv
