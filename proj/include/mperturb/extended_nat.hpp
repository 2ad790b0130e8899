#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "mperturb/errors.hpp"

namespace mperturb {

/// A natural number or +infinity. Used for polynomial order (order(0) = +inf)
/// and for colengths of ideals that are not zero-dimensional at the origin.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;  // zero
  constexpr ExtendedNat(std::uint64_t v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtendedNat infinity() {
    ExtendedNat r;
    r.value_.reset();
    return r;
  }

  constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
  constexpr bool is_finite() const noexcept { return value_.has_value(); }

  std::uint64_t value() const {
    if (!value_) throw PreconditionError("value() requested from an infinite ExtendedNat");
    return *value_;
  }

  friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
  friend constexpr std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return *a.value_ <=> *b.value_;
  }

  friend ExtendedNat operator+(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return ExtendedNat(*a.value_ + *b.value_);
  }

  std::string to_string() const { return value_ ? std::to_string(*value_) : std::string("inf"); }

 private:
  std::optional<std::uint64_t> value_ = std::uint64_t{0};
};

}  // namespace mperturb
