#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mperturb/ideal.hpp"
#include "mperturb/parser.hpp"

namespace mperturb {

struct RingSpec {
  /// 0 selects the rationals, otherwise a prime.
  std::uint32_t characteristic = 0;
  std::vector<std::string> variables;
  std::vector<std::string> defining_ideal;
};

/// Calls fn(RationalField{}) for characteristic 0 and fn(PrimeField(p))
/// otherwise. Both instantiations must return the same type.
template <class Fn>
decltype(auto) with_field(std::uint32_t characteristic, Fn&& fn) {
  if (characteristic == 0) return std::forward<Fn>(fn)(RationalField{});
  return std::forward<Fn>(fn)(PrimeField(characteristic));
}

template <CoefficientField F>
typename RingPresentation<F>::Ptr make_presentation(const RingSpec& spec, F field, GroebnerOptions options = {}) {
  auto ring = PolyRing<F>::make(std::move(field), spec.variables);
  std::vector<Polynomial<F>> k;
  for (const auto& text : spec.defining_ideal) {
    for (auto& p : parse_polynomial_list<F>(text, ring)) k.push_back(std::move(p));
  }
  return RingPresentation<F>::make(ring, std::move(k), options);
}

/// Each entry may itself be a comma-separated list. The single entry
/// "maximal" denotes the ideal generated by all variables.
template <CoefficientField F>
Ideal<F> parse_ideal(const typename RingPresentation<F>::Ptr& presentation, const std::vector<std::string>& texts) {
  if (texts.size() == 1 && texts.front() == "maximal") return Ideal<F>::maximal(presentation);
  std::vector<Polynomial<F>> gens;
  for (const auto& text : texts) {
    for (auto& p : parse_polynomial_list<F>(text, presentation->ring())) gens.push_back(std::move(p));
  }
  return Ideal<F>(presentation, std::move(gens));
}

}  // namespace mperturb
