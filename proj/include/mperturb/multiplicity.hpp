#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mperturb/ideal.hpp"

namespace mperturb {

enum class SequenceKind { hilbert_samuel, hilbert_kunz };

/// Lengths l_i = colength(K + I + J_i) where J_i is J^n (Hilbert-Samuel, with
/// normalizer n) or J^[q] (Hilbert-Kunz, with normalizer q = p^e).
struct LengthSequence {
  SequenceKind kind = SequenceKind::hilbert_samuel;
  std::vector<std::uint64_t> values;
  std::vector<std::uint64_t> normalizers;
  /// dim S/(K + I).
  int dimension = 0;
  /// Characteristic for Hilbert-Kunz sequences, 0 otherwise.
  std::uint32_t characteristic = 0;
  /// colength(K + I + J) and the number of generators of J; together they
  /// bound l_e by q^k * colength(K + I + J).
  std::uint64_t base_colength = 0;
  std::size_t j_generators = 0;
  /// Set when the step budget ran out; `values` then holds the computed prefix.
  std::optional<std::string> budget_exhausted;
};

enum class EstimateStatus { exact_stabilized, extrapolated, undetermined };

std::string to_string(EstimateStatus status);

struct MultiplicityEstimate {
  mpq_class value;
  EstimateStatus status = EstimateStatus::undetermined;
  /// Finite differences (Hilbert-Samuel) or ratios l_e / q^a (Hilbert-Kunz).
  std::vector<mpq_class> evidence;
  LengthSequence sequence;
};

/// e(J, S/(K + I)) from the stabilized a-th finite difference of
/// n -> colength(K + I + J^n), a = dim S/(K + I). Differences at n count
/// once n - a exceeds the top degree D of the reduced basis of K + I, i.e. the
/// two equal differences compared are those at n - 1 and n with n - 1 - a >= D.
/// Undetermined if that does not happen by n_max.
template <CoefficientField F>
MultiplicityEstimate hs_multiplicity(const Ideal<F>& i, const Ideal<F>& j, unsigned n_max = 12);

/// l_e = colength(K + I + J^[p^e]) for e = 1..e_max, p the characteristic.
template <CoefficientField F>
LengthSequence hk_sequence(const Ideal<F>& i, const Ideal<F>& j, unsigned e_max);

/// Ratios r_e = l_e / q^a. Exact when the last two ratios agree; otherwise the
/// leading coefficient c0 of the least-squares fit l_e ~ c0 q^a + c1 q^(a-1)
/// over the last min(3, available) points.
MultiplicityEstimate hk_estimate(const LengthSequence& seq, int a);

/// Checks l_e <= q^k * colength(K + I + J) for every entry.
bool satisfies_filtration_bound(const LengthSequence& seq);

/// Colength of K + I computed by linear algebra on the monomial box
/// {x^a : a_i < box_i}, without Groebner bases. Requires x_i^box_i in K + I
/// for every i and a box of at most `max_box` monomials.
template <CoefficientField F>
std::uint64_t colength_box_oracle(const Ideal<F>& i, const std::vector<unsigned>& box,
                                  std::uint64_t max_box = 200'000);

/// Result of adjoining u_i with u_i^n_i = f_i.
template <CoefficientField F>
struct RootAdjunction {
  typename RingPresentation<F>::Ptr presentation;
  /// Names of the new variables, in order.
  std::vector<std::string> root_names;
};

/// R[u_1..u_c]/(u_i^n_i - f_i) presented over S[u_1..u_c]. Names are u (one
/// root) or u1, u2, ... with underscores appended on collision.
template <CoefficientField F>
RootAdjunction<F> adjoin_roots(const typename RingPresentation<F>::Ptr& presentation,
                               const std::vector<Polynomial<F>>& f, const std::vector<unsigned>& n);

}  // namespace mperturb
