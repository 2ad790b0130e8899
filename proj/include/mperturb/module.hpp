#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mperturb/groebner.hpp"
#include "mperturb/polynomial.hpp"

namespace mperturb {

/// An element of the free module S^r, stored as r polynomial components.
template <CoefficientField F>
class FreeModuleVector {
 public:
  using Poly = Polynomial<F>;
  using RingPtr = typename PolyRing<F>::Ptr;

  FreeModuleVector(RingPtr ring, std::size_t rank);
  /// Requires at least one component.
  explicit FreeModuleVector(std::vector<Poly> components);

  static FreeModuleVector basis_vector(RingPtr ring, std::size_t rank, std::size_t index);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return components_.size(); }
  const Poly& operator[](std::size_t i) const { return components_.at(i); }
  Poly& operator[](std::size_t i) { return components_.at(i); }
  const std::vector<Poly>& components() const noexcept { return components_; }
  bool is_zero() const noexcept;

  friend FreeModuleVector operator+(const FreeModuleVector& a, const FreeModuleVector& b) { return a.combine(b, false); }
  friend FreeModuleVector operator-(const FreeModuleVector& a, const FreeModuleVector& b) { return a.combine(b, true); }

  bool operator==(const FreeModuleVector& other) const { return components_ == other.components_; }
  std::string to_string() const;

 private:
  FreeModuleVector combine(const FreeModuleVector& b, bool subtract) const;

  RingPtr ring_;
  std::vector<Poly> components_;
};

template <CoefficientField F>
FreeModuleVector<F> operator*(const Polynomial<F>& c, const FreeModuleVector<F>& v);

/// Reduced Groebner basis of a submodule of S^r under the position-over-term
/// extension of the ring order (component 0 largest). All inputs share the
/// rank `rank`.
template <CoefficientField F>
std::vector<FreeModuleVector<F>> module_groebner(std::span<const FreeModuleVector<F>> vectors,
                                                 const GroebnerOptions& options = {});

template <CoefficientField F>
FreeModuleVector<F> module_normal_form(const FreeModuleVector<F>& v, std::span<const FreeModuleVector<F>> gb,
                                       const GroebnerOptions& options = {});

/// Confluence check for module bases (all S-vectors reduce to zero).
template <CoefficientField F>
bool is_module_groebner_basis(std::span<const FreeModuleVector<F>> basis);

/// Generators of {a in S^c : sum a_i g_i = 0}, obtained by lifting: a
/// position-over-term basis of the rows (g_i | e_i) whose elements vanish in
/// the first block.
template <CoefficientField F>
std::vector<FreeModuleVector<F>> syzygies(std::span<const Polynomial<F>> gens, const GroebnerOptions& options = {});

/// Syzygies of vectors v_1..v_s in S^r: {a in S^s : sum a_i v_i = 0}.
template <CoefficientField F>
std::vector<FreeModuleVector<F>> module_syzygies(std::span<const FreeModuleVector<F>> vectors,
                                                 const GroebnerOptions& options = {});

}  // namespace mperturb
