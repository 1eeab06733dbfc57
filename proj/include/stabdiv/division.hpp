#pragma once

// Multivariate division with remainder, in two variants.
//
// Algorithm I repeatedly looks at LT(p): if some LT(f_i) divides it, p is
// reduced by f_i; otherwise LT(p) moves to the remainder. After each
// iteration h = sum a_i f_i + p + r.
//
// Algorithm II picks any reducible term t of p (not only the leading one) and
// reduces it; it stops when no term of p is divisible by any LT(f_i) and
// returns r = p. After each iteration h = sum a_i f_i + p.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabdiv/norms.hpp"
#include "stabdiv/ordering.hpp"
#include "stabdiv/polynomial.hpp"

namespace stabdiv {

enum class DivisionAlgorithm { I, II };
enum class DivisorChoice { min_index, max_index };
enum class TermChoice { leading, minimal_reducible };

struct Strategy {
  DivisionAlgorithm algorithm = DivisionAlgorithm::I;
  DivisorChoice divisor = DivisorChoice::min_index;
  TermChoice term = TermChoice::leading;  // Algorithm II only

  /// Textbook division: Algorithm I, lowest admissible divisor index.
  static Strategy clo_default() { return {}; }
  /// Algorithm I, highest admissible divisor index (two-variable stable division).
  static Strategy bivariate_stable() { return {DivisionAlgorithm::I, DivisorChoice::max_index}; }
  /// Algorithm II reducing the order-minimal reducible term first.
  static Strategy dominant_min_term() {
    return {DivisionAlgorithm::II, DivisorChoice::min_index, TermChoice::minimal_reducible};
  }

  /// CLO_DEFAULT, BIVARIATE_STABLE or DOMINANT_MIN_TERM.
  static Strategy parse(std::string_view name);
  std::string name() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

template <Coefficient K>
struct DivisionStep {
  std::size_t index = 0;
  /// The term of p acted on.
  Term<K> term;
  /// Divisor used, or nullopt when the term moved to the remainder.
  std::optional<std::size_t> divisor;
  /// Norms of p after this step.
  double p_l1 = 0.0;
  double p_h2 = 0.0;
  /// Leading monomial of the residual -(t/LT f)(f - LT f) added to p by a
  /// reduction; nullopt when the divisor is a single term.
  std::optional<MultiIndex> residual_leading;
  /// Heights of the reduced term and of the residual (graded orders only).
  std::optional<std::uint64_t> term_height;
  std::optional<std::uint64_t> residual_height;
  /// p after this step, when DivisionOptions::keep_snapshots is set.
  std::optional<Polynomial<K>> p_snapshot;
};

template <Coefficient K>
struct DivisionResult {
  std::vector<Polynomial<K>> quotients;
  Polynomial<K> remainder;
  std::vector<DivisionStep<K>> trace;
};

struct DivisionOptions {
  bool keep_snapshots = false;
};

namespace detail {

template <Coefficient K>
double l1_as_double(const Polynomial<K>& p) {
  if constexpr (std::is_same_v<K, Rational>) {
    return to_double(l1_norm(p));
  } else {
    return l1_norm(p);
  }
}

template <Coefficient K>
void check_division_inputs(const Polynomial<K>& h, std::span<const Polynomial<K>> divisors,
                           const MonomialOrder& order) {
  if (!h.is_scalar()) throw UnsupportedError("division of vector-valued polynomials is not supported");
  if (order.nvars() != h.nvars()) throw DimensionError("order and dividend disagree on variable count");
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    const auto& f = divisors[i];
    h.require_compatible(f);
    if (!f.is_scalar()) throw UnsupportedError("vector-valued divisor");
    if (f.is_zero()) throw ZeroPolynomialError("divisor f" + std::to_string(i + 1) + " is zero");
  }
}

inline std::size_t pick_divisor(const std::vector<std::size_t>& admissible, DivisorChoice choice) {
  return choice == DivisorChoice::min_index ? admissible.front() : admissible.back();
}

}  // namespace detail

/// Divides h by the ordered tuple (f_1, ..., f_k). Exact for the exact
/// coefficient domains: h == sum a_i f_i + r holds as an identity.
template <Coefficient K>
DivisionResult<K> divide(const Polynomial<K>& h, std::span<const Polynomial<K>> divisors,
                         const MonomialOrder& order, const Strategy& strategy,
                         const DivisionOptions& options = {}) {
  detail::check_division_inputs(h, divisors, order);
  const std::size_t k = divisors.size();

  std::vector<Term<K>> lead;
  std::vector<Polynomial<K>> tails;
  lead.reserve(k);
  tails.reserve(k);
  for (const auto& f : divisors) {
    lead.push_back(leading_term(f, order));
    Polynomial<K> tail = f;
    tail.add_term(lead.back().index, K(-lead.back().coeff));
    tails.push_back(std::move(tail));
  }

  DivisionResult<K> result{std::vector<Polynomial<K>>(k, Polynomial<K>(h.shared_ambient())),
                           Polynomial<K>(h.shared_ambient()),
                           {}};
  Polynomial<K> p = h;

  auto admissible_for = [&](const MultiIndex& m) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k; ++i) {
      if (lead[i].index.divides(m)) out.push_back(i);
    }
    return out;
  };

  auto record = [&](const Term<K>& t, std::optional<std::size_t> divisor) {
    DivisionStep<K> step;
    step.index = result.trace.size() + 1;
    step.term = t;
    step.divisor = divisor;
    step.p_l1 = detail::l1_as_double(p);
    step.p_h2 = h2_norm(p);
    if (divisor) {
      const auto& tail = tails[*divisor];
      step.term_height = height(order, t.index);
      if (!tail.is_zero()) {
        const MultiIndex shift = t.index - lead[*divisor].index;
        step.residual_leading = leading_monomial(tail, order) + shift;
        step.residual_height = height(order, *step.residual_leading);
      }
    }
    if (options.keep_snapshots) step.p_snapshot = p;
    result.trace.push_back(std::move(step));
  };

  // p := p - (t / LT f_i) f_i, a_i := a_i + t / LT f_i
  auto reduce = [&](const Term<K>& t, std::size_t i) {
    const MultiIndex shift = t.index - lead[i].index;
    const K factor = K(t.coeff / lead[i].coeff);
    result.quotients[i].add_term(shift, factor);
    p.add_term(t.index, K(-t.coeff));
    p -= tails[i].times_monomial(shift, factor);
  };

  if (strategy.algorithm == DivisionAlgorithm::I) {
    while (!p.is_zero()) {
      const Term<K> lt = leading_term(p, order);
      const auto admissible = admissible_for(lt.index);
      if (admissible.empty()) {
        result.remainder.add_term(lt.index, lt.coeff);
        p.add_term(lt.index, K(-lt.coeff));
        record(lt, std::nullopt);
      } else {
        const std::size_t i = detail::pick_divisor(admissible, strategy.divisor);
        reduce(lt, i);
        record(lt, i);
      }
    }
    return result;
  }

  while (true) {
    std::optional<Term<K>> chosen;
    for (const auto& [key, c] : p.terms()) {
      bool reducible = false;
      for (std::size_t i = 0; i < k && !reducible; ++i) reducible = lead[i].index.divides(key.index);
      if (!reducible) continue;
      if (!chosen) {
        chosen = Term<K>{c, key.index, key.channel};
        continue;
      }
      const auto cmp = order.compare(key.index, chosen->index);
      const bool better = strategy.term == TermChoice::leading ? cmp > 0 : cmp < 0;
      if (better) chosen = Term<K>{c, key.index, key.channel};
    }
    if (!chosen) break;
    const std::size_t i = detail::pick_divisor(admissible_for(chosen->index), strategy.divisor);
    reduce(*chosen, i);
    record(*chosen, i);
  }
  result.remainder = std::move(p);
  return result;
}

template <Coefficient K>
DivisionResult<K> divide(const Polynomial<K>& h, const std::vector<Polynomial<K>>& divisors,
                         const MonomialOrder& order, const Strategy& strategy,
                         const DivisionOptions& options = {}) {
  return divide(h, std::span<const Polynomial<K>>(divisors), order, strategy, options);
}

/// sum a_i f_i + r, for checking the division identity.
template <Coefficient K>
Polynomial<K> recombine(std::span<const Polynomial<K>> quotients, std::span<const Polynomial<K>> divisors,
                        const Polynomial<K>& remainder) {
  Polynomial<K> out = remainder;
  for (std::size_t i = 0; i < divisors.size(); ++i) out += poly_mul(quotients[i], divisors[i]);
  return out;
}

/// True when no term of r is divisible by any LT(f_i).
template <Coefficient K>
bool is_fully_reduced(const Polynomial<K>& r, std::span<const Polynomial<K>> divisors,
                      const MonomialOrder& order) {
  std::vector<MultiIndex> lead;
  for (const auto& f : divisors) lead.push_back(leading_monomial(f, order));
  for (const auto& [key, c] : r.terms()) {
    for (const auto& m : lead) {
      if (m.divides(key.index)) return false;
    }
  }
  return true;
}

}  // namespace stabdiv
