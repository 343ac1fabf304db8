#ifndef CCSYM_EXPR_HPP
#define CCSYM_EXPR_HPP

#include <string>

#include "ccsym/algebra.hpp"
#include "ccsym/curve.hpp"
#include "ccsym/laurent.hpp"

namespace ccsym {

// Grammar shared by the CLI and the python bindings (EBNF in the README):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | primary ('^' ('-')? INT)?
//   primary:= INT | 'z' | 't' | 'e' | 'x' | '(' expr ')'
// Field/algebra descriptors: `F5`, `F9:x^2+1`, `Q`, with an optional
// nilpotent suffix `[e^2]`. Series literals accept an `@prec=N` suffix fixing
// the precision window (N coefficients from the lowest exponent up).

FieldPtr parse_field(const std::string& s);
AlgebraPtr parse_algebra(const std::string& s);

/// Constant expression in the atoms x, e.
RingElement parse_element(const AlgebraPtr& a, const std::string& s);

/// Laurent series expression in z (plus x, e). Exact when no division forces
/// a truncation and no @prec is given; otherwise windowed (@prec, or
/// default_prec when a non-monomial denominator demands truncation).
LaurentSeries parse_series(const AlgebraPtr& a, const std::string& s, long default_prec = 16);

/// Rational function of t over the algebra.
RationalFunction parse_rational(const AlgebraPtr& a, const std::string& s);

}  // namespace ccsym

#endif
