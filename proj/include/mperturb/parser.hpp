#pragma once

#include <string_view>
#include <vector>

#include "mperturb/polynomial.hpp"

namespace mperturb {

/// Reads a polynomial in the grammar
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | var ['^' nat]
///
/// Whitespace is ignored. Variables must be declared in the ring; "xy" is a
/// single (probably undeclared) identifier, never an implicit product.
template <CoefficientField F>
Polynomial<F> parse_polynomial(std::string_view text, const typename PolyRing<F>::Ptr& ring);

/// Comma-separated list of polynomials; an empty or all-blank string gives an
/// empty list.
template <CoefficientField F>
std::vector<Polynomial<F>> parse_polynomial_list(std::string_view text, const typename PolyRing<F>::Ptr& ring);

}  // namespace mperturb
