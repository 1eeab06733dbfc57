#pragma once

// Hand-rolled random generators for the property tests. Every test seeds its
// own engine so failures reproduce.

#include <random>
#include <vector>

#include "stabdiv/polynomial.hpp"
#include "stabdiv/text.hpp"

namespace testing_support {

using stabdiv::Ambient;
using stabdiv::CPoly;
using stabdiv::MultiIndex;
using stabdiv::QPoly;
using stabdiv::Rational;

inline Rational random_rational(std::mt19937& rng, int max_num = 9, int max_den = 4) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  int n = 0;
  while (n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

inline MultiIndex random_index(std::mt19937& rng, std::size_t nvars, int degree) {
  // stars and bars: drop degree balls into nvars bins
  std::vector<int> e(nvars, 0);
  std::uniform_int_distribution<std::size_t> bin(0, nvars - 1);
  for (int k = 0; k < degree; ++k) ++e[bin(rng)];
  return MultiIndex(e);
}

inline QPoly random_poly(std::mt19937& rng, const Ambient& ambient, int max_degree, int max_terms) {
  QPoly p(ambient);
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> chan(0, ambient.channels() - 1);
  const int count = terms(rng);
  for (int k = 0; k < count; ++k) p.add_term(random_index(rng, ambient.nvars(), deg(rng)), random_rational(rng), chan(rng));
  return p;
}

inline QPoly random_homogeneous(std::mt19937& rng, const Ambient& ambient, int degree, int max_terms) {
  QPoly p(ambient);
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> chan(0, ambient.channels() - 1);
  while (p.is_zero()) {
    const int count = terms(rng);
    for (int k = 0; k < count; ++k) p.add_term(random_index(rng, ambient.nvars(), degree), random_rational(rng), chan(rng));
  }
  return p;
}

inline QPoly parse(const char* text, const Ambient& ambient) { return stabdiv::parse_polynomial(text, ambient); }

inline std::vector<CPoly> to_float_all(const std::vector<QPoly>& ps) {
  std::vector<CPoly> out;
  for (const auto& p : ps) out.push_back(stabdiv::to_float(p));
  return out;
}

}  // namespace testing_support
