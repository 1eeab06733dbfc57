#include "stabdiv/groebner.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace stabdiv {

namespace {

struct Lead {
  MultiIndex index;
  Rational coeff;
};

Lead lead_of(const QPoly& f, const MonomialOrder& order) {
  auto t = leading_term(f, order);
  return {std::move(t.index), std::move(t.coeff)};
}

// Full reduction of p modulo G (no trace): every term of the result is
// irreducible.
QPoly reduce_full(QPoly p, const std::vector<QPoly>& g, const std::vector<Lead>& leads,
                  const MonomialOrder& order) {
  QPoly r(p.shared_ambient());
  while (!p.is_zero()) {
    const Term<Rational> lt = leading_term(p, order);
    bool reduced = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (!leads[i].index.divides(lt.index)) continue;
      const MultiIndex shift = lt.index - leads[i].index;
      const Rational factor = lt.coeff / leads[i].coeff;
      p -= g[i].times_monomial(shift, factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      r.add_term(lt.index, lt.coeff);
      p.add_term(lt.index, Rational(-lt.coeff));
    }
  }
  return r;
}

void check_inputs(std::span<const QPoly> f, const MonomialOrder& order) {
  for (const auto& p : f) {
    if (!p.is_scalar()) throw UnsupportedError("Groebner bases of vector-valued generators are not supported");
    if (p.nvars() != order.nvars()) throw DimensionError("order and generators disagree on variable count");
  }
}

}  // namespace

std::vector<MultiIndex> GroebnerBasis::leading_monomials() const {
  std::vector<MultiIndex> out;
  for (const auto& g : generators) out.push_back(leading_monomial(g, order));
  return out;
}

QPoly s_polynomial(const QPoly& f, const QPoly& g, const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError("S-polynomial of the zero polynomial");
  f.require_compatible(g);
  const Lead lf = lead_of(f, order);
  const Lead lg = lead_of(g, order);
  const MultiIndex l = lcm(lf.index, lg.index);
  QPoly out = f.times_monomial(l - lf.index, Rational(1 / lf.coeff));
  out -= g.times_monomial(l - lg.index, Rational(1 / lg.coeff));
  return out;
}

QPoly monic(const QPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  const Rational lc = leading_term(f, order).coeff;
  return f.scaled(Rational(1 / lc));
}

GroebnerBasis buchberger(std::span<const QPoly> generators, const MonomialOrder& order) {
  check_inputs(generators, order);
  std::vector<QPoly> g;
  std::vector<Lead> leads;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    g.push_back(monic(f, order));
    leads.push_back(lead_of(g.back(), order));
  }

  // pending pairs, i < j
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace(i, j);
  }

  auto in_pairs = [&](std::size_t a, std::size_t b) { return pairs.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pairs.empty()) {
    // normal selection: smallest lcm under the order, then lowest indices
    auto best = pairs.begin();
    MultiIndex best_lcm = lcm(leads[best->first].index, leads[best->second].index);
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      MultiIndex l = lcm(leads[it->first].index, leads[it->second].index);
      if (order.less(l, best_lcm)) {
        best = it;
        best_lcm = std::move(l);
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);

    if (coprime(leads[i].index, leads[j].index)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j) continue;
      chain = !in_pairs(i, k) && !in_pairs(j, k) && leads[k].index.divides(best_lcm);
    }
    if (chain) continue;

    QPoly r = reduce_full(s_polynomial(g[i], g[j], order), g, leads, order);
    if (r.is_zero()) continue;
    g.push_back(monic(r, order));
    leads.push_back(lead_of(g.back(), order));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace(k, g.size() - 1);
  }

  // minimize: drop generators whose leading monomial is divisible by another's
  std::vector<QPoly> minimal;
  std::vector<Lead> minimal_leads;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
      if (k == i || !leads[k].index.divides(leads[i].index)) continue;
      // equal leading monomials: keep the first
      redundant = leads[k].index != leads[i].index || k < i;
    }
    if (!redundant) {
      minimal.push_back(g[i]);
      minimal_leads.push_back(leads[i]);
    }
  }

  // reduce tails against the other generators
  std::vector<QPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<QPoly> others;
    std::vector<Lead> other_leads;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      if (k == i) continue;
      others.push_back(minimal[k]);
      other_leads.push_back(minimal_leads[k]);
    }
    QPoly tail = minimal[i];
    tail.add_term(minimal_leads[i].index, Rational(-minimal_leads[i].coeff));
    QPoly out = reduce_full(tail, others, other_leads, order);
    out.add_term(minimal_leads[i].index, Rational(1));
    reduced.push_back(std::move(out));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const QPoly& a, const QPoly& b) {
    return order.less(leading_monomial(b, order), leading_monomial(a, order));
  });
  return {std::move(reduced), order, true};
}

bool is_groebner_basis(std::span<const QPoly> generators, const MonomialOrder& order) {
  check_inputs(generators, order);
  std::vector<QPoly> g;
  std::vector<Lead> leads;
  for (const auto& f : generators) {
    if (f.is_zero()) continue;
    g.push_back(f);
    leads.push_back(lead_of(f, order));
  }
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!reduce_full(s_polynomial(g[i], g[j], order), g, leads, order).is_zero()) return false;
    }
  }
  return true;
}

QPoly normal_form(const QPoly& h, const GroebnerBasis& basis) {
  std::vector<Lead> leads;
  for (const auto& f : basis.generators) {
    if (f.is_zero()) throw ZeroPolynomialError("Groebner basis contains the zero polynomial");
    leads.push_back(lead_of(f, basis.order));
  }
  return reduce_full(h, basis.generators, leads, basis.order);
}

std::vector<MultiIndex> standard_monomials(const GroebnerBasis& basis, int n) {
  for (const auto& g : basis.generators) {
    if (!g.is_homogeneous()) throw UnsupportedError("standard monomials need homogeneous generators");
  }
  const auto leads = basis.leading_monomials();
  std::vector<MultiIndex> out;
  for (const auto& m : monomials_of_degree(basis.nvars(), n)) {
    bool divisible = false;
    for (const auto& l : leads) divisible = divisible || l.divides(m);
    if (!divisible) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), DescendingBy{&basis.order});
  return out;
}

std::size_t hilbert_function(const GroebnerBasis& basis, int n) { return standard_monomials(basis, n).size(); }

bool is_zero_dimensional(const GroebnerBasis& basis) {
  const auto leads = basis.leading_monomials();
  for (std::size_t v = 0; v < basis.nvars(); ++v) {
    bool found = false;
    for (const auto& l : leads) found = found || (l[v] > 0 && l.degree() == l[v]);
    if (!found) return false;
  }
  return true;
}

int hilbert_dimension_from_values(std::span<const long> values, std::size_t nvars, int window_start) {
  if (values.size() < nvars + 1) throw ValidationError("Hilbert window needs at least d + 1 values");
  std::vector<long> diff(values.begin(), values.end());
  // k-th differences for k = 0..d; the d-th must vanish
  std::vector<bool> vanishes;
  for (std::size_t k = 0; k <= nvars; ++k) {
    vanishes.push_back(std::all_of(diff.begin(), diff.end(), [](long v) { return v == 0; }));
    std::vector<long> next;
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) next.push_back(diff[i + 1] - diff[i]);
    diff = std::move(next);
  }
  if (!vanishes[nvars]) {
    const int suggested = 2 * window_start + static_cast<int>(nvars) + 1;
    throw WindowTooSmallError("Hilbert function is not polynomial of degree < " + std::to_string(nvars) +
                                  " on the window starting at " + std::to_string(window_start) +
                                  "; try starting at " + std::to_string(suggested),
                              suggested);
  }
  for (std::size_t k = 0; k <= nvars; ++k) {
    if (vanishes[k]) return static_cast<int>(k);
  }
  return static_cast<int>(nvars);
}

int hilbert_dimension(const GroebnerBasis& basis, std::optional<int> window_start) {
  int max_degree = 0;
  for (const auto& g : basis.generators) max_degree = std::max(max_degree, g.total_degree());
  const int d = static_cast<int>(basis.nvars());
  const int n0 = window_start.value_or(max_degree + d);
  if (n0 < 0) throw ValidationError("Hilbert window start must be non-negative");
  std::vector<long> values;
  for (int n = n0; n <= n0 + d + 2; ++n) values.push_back(static_cast<long>(hilbert_function(basis, n)));
  return hilbert_dimension_from_values(values, basis.nvars(), n0);
}

}  // namespace stabdiv
