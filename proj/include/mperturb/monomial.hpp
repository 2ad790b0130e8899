#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mperturb {

inline constexpr std::size_t kMaxVariables = 16;

/// Exponent vector of a monomial in at most kMaxVariables variables. Unused
/// slots stay zero, so monomials of one ring compare without knowing its size.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial from_exponents(std::span<const unsigned> exponents);
  static Monomial variable(std::size_t index, unsigned exponent = 1);

  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const noexcept {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  /// Number of variables with positive exponent.
  std::size_t support_size() const noexcept;
  /// True when the monomial is x_i^e for some i and e >= 1; sets `index`.
  bool is_pure_power(std::size_t& index) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept;
  Monomial pow(unsigned k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }
  /// Plain lexicographic comparison of exponent vectors; for containers only.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

enum class OrderKind { grevlex, lex };

/// A global monomial order: graded reverse lexicographic or lexicographic,
/// applied to the variables in `priority` order (priority[0] is the largest).
class MonomialOrder {
 public:
  static MonomialOrder grevlex(std::size_t num_vars);
  static MonomialOrder lex(std::size_t num_vars);
  MonomialOrder(OrderKind kind, std::vector<std::uint8_t> priority);

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::uint8_t>& priority() const noexcept { return priority_; }
  std::size_t num_variables() const noexcept { return priority_.size(); }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept {
    if (kind_ == OrderKind::grevlex) {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t k = priority_.size(); k-- > 0;) {
        const std::size_t v = priority_[k];
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
      }
      return 0;
    }
    for (const std::size_t v : priority_) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }

  bool operator==(const MonomialOrder&) const = default;

 private:
  OrderKind kind_;
  std::vector<std::uint8_t> priority_;
};

}  // namespace mperturb
