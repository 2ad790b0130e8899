#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mperturb/polynomial.hpp"

namespace mperturb {

struct GroebnerOptions {
  /// Reduction steps allowed per basis computation before BudgetExceeded.
  std::uint64_t max_steps = 1'000'000;
  /// Mutation hook for negative controls: silently discards every second
  /// critical pair, producing a basis that fails the confluence check.
  bool drop_pairs_for_testing = false;
};

/// Unique reduced Groebner basis of the ideal generated by `gens` under the
/// order of their ring: monic, interreduced, sorted by descending leading
/// monomial. Empty for the zero ideal, {1} for the unit ideal.
template <CoefficientField F>
std::vector<Polynomial<F>> reduced_groebner(std::span<const Polynomial<F>> gens, const GroebnerOptions& options = {});

/// Same, after moving the generators to a copy of their ring carrying `order`.
template <CoefficientField F>
std::vector<Polynomial<F>> reduced_groebner(std::span<const Polynomial<F>> gens, const MonomialOrder& order,
                                            const GroebnerOptions& options = {});

/// Remainder of full reduction by a Groebner basis: no term of the result is
/// divisible by a leading monomial of `gb`, and f - NF(f) lies in the ideal.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> gb,
                          const GroebnerOptions& options = {});

/// Confluence check: every S-polynomial of `basis` reduces to zero modulo
/// `basis`. No criteria are applied, so this is independent of the pair
/// bookkeeping used to build the basis.
template <CoefficientField F>
bool is_groebner_basis(std::span<const Polynomial<F>> basis);

}  // namespace mperturb
