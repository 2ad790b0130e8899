#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mperturb/extended_nat.hpp"
#include "mperturb/groebner.hpp"
#include "mperturb/module.hpp"
#include "mperturb/polynomial.hpp"

namespace mperturb {

/// R = S/K viewed at the origin: the ambient ring S, the defining ideal K
/// (every generator of order >= 1, so the origin lies on V(K)) and the limits
/// applied to every Groebner computation in R. The maximal ideal m of R is
/// generated by the variables.
template <CoefficientField F>
class RingPresentation {
 public:
  using Ptr = std::shared_ptr<const RingPresentation>;
  using Poly = Polynomial<F>;
  using RingPtr = typename PolyRing<F>::Ptr;

  RingPresentation(RingPtr ring, std::vector<Poly> defining_ideal, GroebnerOptions options = {});

  static Ptr make(RingPtr ring, std::vector<Poly> defining_ideal = {}, GroebnerOptions options = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const F& field() const noexcept { return ring_->field(); }
  std::size_t num_variables() const noexcept { return ring_->num_variables(); }
  const std::vector<Poly>& defining_ideal() const noexcept { return defining_; }
  const GroebnerOptions& options() const noexcept { return options_; }

  Ptr with_order(const MonomialOrder& order) const;
  Ptr with_options(const GroebnerOptions& options) const;

  bool operator==(const RingPresentation& other) const {
    return *ring_ == *other.ring_ && defining_ == other.defining_;
  }

 private:
  RingPtr ring_;
  std::vector<Poly> defining_;
  GroebnerOptions options_;
};

/// An ideal I of R = S/K, represented by generators in S. Every derived fact
/// (Groebner basis, dimension, colength) is a fact about the preimage K + I in
/// S and is cached on first use. Copies share the cache; a handle must not be
/// populated from two threads at once.
template <CoefficientField F>
class Ideal {
 public:
  using Poly = Polynomial<F>;
  using PresPtr = typename RingPresentation<F>::Ptr;
  using RingPtr = typename PolyRing<F>::Ptr;

  Ideal(PresPtr presentation, std::vector<Poly> generators);

  static Ideal zero(PresPtr presentation);
  static Ideal unit(PresPtr presentation);
  /// m = (x_1, ..., x_n).
  static Ideal maximal(PresPtr presentation);
  /// m^n as all monomials of degree n.
  static Ideal maximal_power(PresPtr presentation, unsigned n);
  /// (x_1^n, ..., x_n^n); the unit ideal for n = 0.
  static Ideal variable_powers(PresPtr presentation, unsigned n);

  const PresPtr& presentation() const noexcept { return pres_; }
  const RingPtr& ring() const noexcept { return pres_->ring(); }
  const std::vector<Poly>& generators() const noexcept { return gens_; }

  /// Reduced Groebner basis of K + I in S.
  const std::vector<Poly>& groebner_basis() const;
  std::vector<Monomial> leading_monomials() const;
  Poly normal_form(const Poly& f) const;
  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  /// I = 0 in R, i.e. I is contained in K.
  bool is_zero() const;

  /// Krull dimension of S/(K + I); -1 for the unit ideal.
  int dimension() const;
  /// Length of (S/(K + I)) localized at the origin when K + I is
  /// zero-dimensional; +inf otherwise.
  ExtendedNat colength() const;

  /// Generators of K + I (K first).
  std::vector<Poly> preimage_generators() const;
  /// The same generators in another presentation of the same ring (for example
  /// with a different monomial order).
  Ideal moved_to(PresPtr other) const;

  std::string to_string() const;

 private:
  struct Cache;
  PresPtr pres_;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

template <CoefficientField F>
Ideal<F> operator+(const Ideal<F>& a, const Ideal<F>& b);
template <CoefficientField F>
Ideal<F> operator*(const Ideal<F>& a, const Ideal<F>& b);

/// I^k; k = 0 yields the unit ideal.
template <CoefficientField F>
Ideal<F> power(const Ideal<F>& a, unsigned k);

/// (a :_R b) via syzygies of (K + a, g) for each generator g of b, intersected.
template <CoefficientField F>
Ideal<F> colon(const Ideal<F>& a, const Ideal<F>& b);

template <CoefficientField F>
Ideal<F> intersection(const Ideal<F>& a, const Ideal<F>& b);

/// Frobenius bracket power a^[q] = (g^q : g generates a) for q a power of the
/// characteristic.
template <CoefficientField F>
Ideal<F> bracket_power(const Ideal<F>& a, std::uint64_t q);

template <CoefficientField F>
int krull_dimension(const Ideal<F>& a) {
  return a.dimension();
}

template <CoefficientField F>
ExtendedNat colength(const Ideal<F>& a) {
  return a.colength();
}

/// Equality of K + a and K + b in S, decided by comparing reduced bases.
template <CoefficientField F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b);

/// Equality of the ideals after localizing at the origin. Requires `a` to have
/// finite colength L; compares a + (x_i^L) with b + (x_i^L) and checks that b
/// locally contains every x_i^L.
template <CoefficientField F>
bool locally_equal_at_origin(const Ideal<F>& a, const Ideal<F>& b);

/// Membership of f in the localization of `a` at the origin. When `a` has
/// finite colength L this is membership in a + (x_i^L); otherwise it falls back
/// to global membership, which can only under-report.
template <CoefficientField F>
bool locally_contains(const Ideal<F>& a, const Polynomial<F>& f);

/// Number of monomials outside the monomial ideal generated by `leading`,
/// which must contain a pure power of every one of the first `num_vars`
/// variables. Returns +inf when some variable has no pure power.
ExtendedNat count_standard_monomials(std::span<const Monomial> leading, std::size_t num_vars);

/// Size of a largest variable subset U with in(I) cap k[U] = 0.
int dimension_of_monomial_ideal(std::span<const Monomial> leading, std::size_t num_vars);

}  // namespace mperturb
