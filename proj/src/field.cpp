#include "mperturb/field.hpp"

#include "mperturb/errors.hpp"

namespace mperturb {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw PreconditionError("prime field characteristic must be below 2^31");
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw PreconditionError("inverse of zero in " + name());
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  std::int64_t r = s0 % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_integer(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::from_integer(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return static_cast<value_type>(r.get_ui());
}

PrimeField::value_type PrimeField::from_fraction(const mpz_class& num, const mpz_class& den) const {
  value_type d = from_integer(den);
  if (d == 0) {
    throw PreconditionError("denominator " + den.get_str() + " is not invertible in " + name());
  }
  return div(from_integer(num), d);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (sgn(a) == 0) throw PreconditionError("inverse of zero in Q");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), a.get_mpq_t());
  return r;
}

RationalField::value_type RationalField::from_fraction(const mpz_class& num,
                                                       const mpz_class& den) const {
  if (sgn(den) == 0) throw PreconditionError("zero denominator in rational coefficient");
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace mperturb
