#pragma once

// Text grammar for polynomials:
//
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := INT ['/' INT] | NAME ['^' INT]
//
// NAME is a declared variable or a channel marker e1..er. Juxtaposed names
// are split greedily into declared names, so `2xy` reads as 2*x*y.
// Example: `3/2*x^2*y*e1 - w*e2`.

#include <string>
#include <string_view>
#include <vector>

#include "stabdiv/ordering.hpp"
#include "stabdiv/polynomial.hpp"

namespace stabdiv {

/// Throws ParseError carrying the 1-based column of the offending character.
QPoly parse_polynomial(std::string_view text, const Ambient& ambient);

/// Parses one polynomial per entry; a ParseError reports the 1-based entry
/// index as its line.
std::vector<QPoly> parse_polynomials(const std::vector<std::string>& texts, const Ambient& ambient);

/// Canonical text: terms descending under graded-lex in declaration order.
/// parse_polynomial(to_string(p)) == p for every rational p.
std::string to_string(const QPoly& p);
std::string to_string(const QPoly& p, const MonomialOrder& order);
std::string to_string(const GPoly& p);
std::string to_string(const CPoly& p);

/// `x^2*y`, `1` for the constant monomial.
std::string monomial_to_string(const MultiIndex& index, const Ambient& ambient);

template <Coefficient K>
std::string term_to_string(const Term<K>& t, const Ambient& ambient);

}  // namespace stabdiv
