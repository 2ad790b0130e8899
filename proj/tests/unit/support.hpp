#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mperturb/ideal.hpp"
#include "mperturb/parser.hpp"
#include "mperturb/perturbation.hpp"
#include "mperturb/text_input.hpp"

namespace mperturb::testing {

using Fp = PrimeField;
using Q = RationalField;

template <CoefficientField F>
struct Fixture {
  typename RingPresentation<F>::Ptr pres;

  Fixture(F field, std::vector<std::string> vars, std::vector<std::string> k = {})
      : pres(make_presentation<F>(RingSpec{field.characteristic(), std::move(vars), std::move(k)}, field)) {}

  Polynomial<F> P(const std::string& text) const { return parse_polynomial<F>(text, pres->ring()); }
  std::vector<Polynomial<F>> Ps(const std::string& text) const {
    return parse_polynomial_list<F>(text, pres->ring());
  }
  Ideal<F> I(const std::string& text) const { return parse_ideal<F>(pres, {text}); }
  Ideal<F> m() const { return Ideal<F>::maximal(pres); }
};

/// Random polynomial text in the given variables: `terms` terms with degrees
/// in [min_deg, max_deg] and coefficients in 1..5 with random signs.
inline std::string random_poly_text(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned min_deg,
                                    unsigned max_deg, unsigned terms) {
  std::ostringstream s;
  for (unsigned t = 0; t < terms; ++t) {
    const unsigned deg = min_deg + static_cast<unsigned>(uniform_below(rng, max_deg - min_deg + 1));
    std::vector<unsigned> e(vars.size(), 0);
    for (unsigned d = 0; d < deg; ++d) ++e[uniform_below(rng, vars.size())];
    if (t > 0) s << (uniform_below(rng, 2) ? " + " : " - ");
    s << 1 + uniform_below(rng, 5);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (e[v]) s << "*" << vars[v] << "^" << e[v];
    }
  }
  return s.str();
}

/// A random element of the ideal generated by `gens`: sum of random
/// polynomial multiples. Membership by construction is the oracle for normal
/// forms and inclusion tests.
template <CoefficientField F>
Polynomial<F> random_combination(std::mt19937_64& rng, const std::vector<Polynomial<F>>& gens,
                                 const std::vector<std::string>& vars) {
  Polynomial<F> out(gens.front().ring());
  for (const auto& g : gens) {
    out += parse_polynomial<F>(random_poly_text(rng, vars, 0, 2, 2), g.ring()) * g;
  }
  return out;
}

}  // namespace mperturb::testing
