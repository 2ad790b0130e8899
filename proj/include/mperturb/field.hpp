#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mperturb {

/// Trial division.
bool is_prime(std::uint64_t n) noexcept;

/// F_p for a prime p < 2^31, elements stored as residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  bool is_zero(value_type a) const noexcept { return a == 0; }
  bool is_one(value_type a) const noexcept { return a == 1; }
  bool equal(value_type a, value_type b) const noexcept { return a == b; }

  value_type add(value_type a, value_type b) const noexcept {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const noexcept {
    return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % p_);
  }
  value_type inv(value_type a) const;
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  value_type from_integer(std::int64_t v) const noexcept;
  value_type from_integer(const mpz_class& v) const;
  /// num/den reduced into the field; throws PreconditionError when den = 0 mod p.
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const;

  /// Canonical representative as an exact rational (the residue itself).
  mpq_class to_rational(value_type a) const { return mpq_class(a); }
  std::string to_string(value_type a) const { return std::to_string(a); }
  std::string name() const { return "F_" + std::to_string(p_); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// The rationals with GMP arbitrary-precision numerators and denominators.
class RationalField {
 public:
  using value_type = mpq_class;

  std::uint32_t characteristic() const noexcept { return 0; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const noexcept { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
  value_type div(const value_type& a, const value_type& b) const { return a * inv(b); }

  value_type from_integer(std::int64_t v) const { return mpq_class(mpz_class(static_cast<long>(v))); }
  value_type from_integer(const mpz_class& v) const { return mpq_class(v); }
  value_type from_fraction(const mpz_class& num, const mpz_class& den) const;

  mpq_class to_rational(const value_type& a) const { return a; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }

  bool operator==(const RationalField&) const = default;
};

/// The coefficient-domain interface used by every algebraic routine.
template <class F>
concept CoefficientField = std::equality_comparable<F> &&
    requires(const F& f, const typename F::value_type& a, const mpz_class& z) {
      { f.zero() } -> std::convertible_to<typename F::value_type>;
      { f.one() } -> std::convertible_to<typename F::value_type>;
      { f.is_zero(a) } -> std::same_as<bool>;
      { f.add(a, a) } -> std::convertible_to<typename F::value_type>;
      { f.sub(a, a) } -> std::convertible_to<typename F::value_type>;
      { f.mul(a, a) } -> std::convertible_to<typename F::value_type>;
      { f.neg(a) } -> std::convertible_to<typename F::value_type>;
      { f.inv(a) } -> std::convertible_to<typename F::value_type>;
      { f.from_fraction(z, z) } -> std::convertible_to<typename F::value_type>;
      { f.to_rational(a) } -> std::convertible_to<mpq_class>;
      { f.characteristic() } -> std::convertible_to<std::uint32_t>;
      { f.to_string(a) } -> std::convertible_to<std::string>;
    };

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

}  // namespace mperturb
