#include "mperturb/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "mperturb/errors.hpp"

namespace mperturb {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Monomial::Exponent>::max();

void check_exponent(std::uint64_t e) {
  if (e > kMaxExponent) {
    throw PreconditionError("monomial exponent " + std::to_string(e) + " exceeds the supported maximum " +
                            std::to_string(kMaxExponent));
  }
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVariables) {
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    check_exponent(exponents[i]);
    m.exps_[i] = static_cast<Exponent>(exponents[i]);
    m.degree_ += exponents[i];
  }
  return m;
}

Monomial Monomial::variable(std::size_t index, unsigned exponent) {
  if (index >= kMaxVariables) throw PreconditionError("variable index out of range");
  check_exponent(exponent);
  Monomial m;
  m.exps_[index] = static_cast<Exponent>(exponent);
  m.degree_ = exponent;
  return m;
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e > 0; }));
}

bool Monomial::is_pure_power(std::size_t& index) const noexcept {
  if (degree_ == 0) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] == degree_) {
      index = i;
      return true;
    }
    if (exps_[i] != 0) return false;
  }
  return false;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = static_cast<unsigned>(a.exps_[i]) + b.exps_[i];
    check_exponent(e);
    r.exps_[i] = static_cast<Monomial::Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<Monomial::Exponent>(a.exps_[i] - b.exps_[i]);
  }
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::pow(unsigned k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const std::uint64_t e = static_cast<std::uint64_t>(exps_[i]) * k;
    check_exponent(e);
    r.exps_[i] = static_cast<Exponent>(e);
    r.degree_ += static_cast<std::uint32_t>(e);
  }
  return r;
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::uint8_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
  if (priority_.size() > kMaxVariables) throw PreconditionError("too many variables for a monomial order");
  std::vector<std::uint8_t> sorted = priority_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw PreconditionError("monomial order priority must be a permutation of the variables");
  }
}

MonomialOrder MonomialOrder::grevlex(std::size_t num_vars) {
  std::vector<std::uint8_t> p(num_vars);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return MonomialOrder(OrderKind::grevlex, std::move(p));
}

MonomialOrder MonomialOrder::lex(std::size_t num_vars) {
  std::vector<std::uint8_t> p(num_vars);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return MonomialOrder(OrderKind::lex, std::move(p));
}

}  // namespace mperturb
