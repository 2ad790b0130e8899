#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mperturb/extended_nat.hpp"
#include "mperturb/field.hpp"
#include "mperturb/monomial.hpp"

namespace mperturb {

/// The ambient polynomial ring S = k[x_1, ..., x_n] with a fixed global order.
template <CoefficientField F>
class PolyRing {
 public:
  using Ptr = std::shared_ptr<const PolyRing>;

  PolyRing(F field, std::vector<std::string> names, MonomialOrder order);

  static Ptr make(F field, std::vector<std::string> names);
  static Ptr make(F field, std::vector<std::string> names, MonomialOrder order);

  const F& field() const noexcept { return field_; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t num_variables() const noexcept { return names_.size(); }
  const MonomialOrder& order() const noexcept { return order_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Ptr with_order(MonomialOrder order) const;

  /// Renders an exponent vector, e.g. "x^2*y"; "1" for the unit monomial.
  std::string monomial_to_string(const Monomial& m) const;

  bool operator==(const PolyRing& other) const {
    return field_ == other.field_ && names_ == other.names_ && order_ == other.order_;
  }

 private:
  F field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

/// Exact multivariate polynomial. Terms are kept sorted strictly descending in
/// the ring's monomial order with no zero coefficients, so equal polynomials
/// have identical term lists.
template <CoefficientField F>
class Polynomial {
 public:
  using Coeff = typename F::value_type;
  using RingPtr = typename PolyRing<F>::Ptr;

  struct Term {
    Monomial monomial;
    Coeff coeff;
  };

  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, Coeff c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c);
  /// Sorts, combines like terms and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const F& field() const noexcept { return ring_->field(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;

  /// Requires a nonzero polynomial.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().monomial; }

  /// Minimal total degree of a term; +inf for the zero polynomial. f lies in
  /// m^T exactly when order() >= T.
  ExtendedNat order() const noexcept;
  unsigned total_degree() const noexcept;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.combine(b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.combine(b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.multiply(b); }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial scaled(const Coeff& c) const;
  Polynomial shifted(const Monomial& m) const;
  Polynomial pow(unsigned k) const;
  /// Leading coefficient normalized to one; the zero polynomial is returned unchanged.
  Polynomial monic() const;
  /// Terms of total degree below `degree` only.
  Polynomial truncated_below(unsigned degree) const;

  /// The same polynomial viewed in another ring with identical field and
  /// variable names (typically a different monomial order), or in a ring
  /// whose variable list extends this one's.
  Polynomial in_ring(RingPtr other) const;

  bool operator==(const Polynomial& other) const;

  std::string to_string() const;

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms);
  Polynomial combine(const Polynomial& b, bool subtract) const;
  Polynomial multiply(const Polynomial& b) const;
  void check_same_ring(const Polynomial& b) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Substitutes the given polynomials for the variables (index i -> images[i]).
template <CoefficientField F>
Polynomial<F> substitute(const Polynomial<F>& f, std::span<const Polynomial<F>> images);

}  // namespace mperturb
