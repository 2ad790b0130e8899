#pragma once

#include <cstddef>
#include <vector>

#include "mperturb/ideal.hpp"
#include "mperturb/module.hpp"

namespace mperturb {

/// The first two differentials of the Koszul complex on f_1..f_c over S/K.
/// d1 is the row (f_1, ..., f_c); d2 holds the columns f_j e_i - f_i e_j for
/// i < j in lexicographic pair order.
template <CoefficientField F>
struct KoszulData {
  typename RingPresentation<F>::Ptr presentation;
  std::vector<Polynomial<F>> f;
  FreeModuleVector<F> d1;
  std::vector<FreeModuleVector<F>> d2;

  /// Checks d1(d2(e_ij)) = 0 for every column.
  bool composition_vanishes() const;
};

template <CoefficientField F>
KoszulData<F> koszul_complex(typename RingPresentation<F>::Ptr presentation, std::vector<Polynomial<F>> f);

/// H = Z / B inside S^rank. Both are given by generators over S; B contains
/// K * S^rank, so the quotient is an S/K-module.
template <CoefficientField F>
struct Subquotient {
  typename RingPresentation<F>::Ptr presentation;
  std::size_t rank = 0;
  std::vector<FreeModuleVector<F>> cycles;
  std::vector<FreeModuleVector<F>> boundaries;
  /// The generating set passed the origin-based minimality test. This is a
  /// necessary condition for minimality in the local ring, not a proof of it.
  bool minimality_verified_at_origin = false;

  /// Every cycle generator lies in the boundary submodule.
  bool is_zero() const;
};

/// Presents H_1(f; S/K). Rejects generator lists that are visibly not minimal
/// at the origin: some f_i of order 0, or some f_i inside
/// K + m*(f) + (f_j : j != i).
template <CoefficientField F>
Subquotient<F> koszul_h1(typename RingPresentation<F>::Ptr presentation, std::vector<Polynomial<F>> f);

/// ann(Z/B) = intersection over cycle generators z of (B :_S z), returned as
/// an ideal of S/K. The unit ideal when H = 0.
template <CoefficientField F>
Ideal<F> h1_annihilator(const Subquotient<F>& h);

struct H1Condition {
  bool holds = false;
  /// dim S/ann(H_1); -1 when H_1 = 0.
  int dim_h1 = -1;
  /// dim S/(K + I).
  int dim_quotient = 0;
  /// Set when dim_quotient is 0, where the condition is vacuous.
  bool trivially = false;
};

/// holds iff dim_h1 < dim_quotient.
template <CoefficientField F>
H1Condition h1_condition(typename RingPresentation<F>::Ptr presentation, std::vector<Polynomial<F>> f);

}  // namespace mperturb
