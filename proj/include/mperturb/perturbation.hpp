#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "mperturb/ideal.hpp"

namespace mperturb {

/// Seeded sampling parameters: each epsilon is a sum of `terms_per_eps`
/// random monomials (fewer if two coincide) with degrees in [T, T + window]
/// and small nonzero coefficients.
struct RandomMode {
  std::uint64_t seed = 0;
  unsigned degree_window = 0;
  unsigned terms_per_eps = 1;
};

template <CoefficientField F>
struct PerturbationSpec {
  /// Every epsilon has order >= T.
  unsigned order = 1;
  /// Either one fixed epsilon per generator, or random sampling.
  std::variant<std::vector<Polynomial<F>>, RandomMode> mode = RandomMode{};
  /// Number of random trials; a deterministic spec always yields one trial.
  unsigned trials = 1;
  /// Upper bound on the number of monomials with degree in [T, T + window].
  std::uint64_t monomial_cap = 100'000;
};

/// The generator for trial `trial` at order `order`. Depends only on
/// (seed, order, trial).
std::mt19937_64 trial_engine(std::uint64_t seed, unsigned order, unsigned trial);

/// Uniform integer in [0, n) by rejection so the stream is identical on every
/// standard library.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n);

/// trials x c perturbations, each of order >= T.
template <CoefficientField F>
std::vector<std::vector<Polynomial<F>>> sample_perturbation(const PerturbationSpec<F>& spec,
                                                            const typename RingPresentation<F>::Ptr& presentation,
                                                            std::size_t c);

/// f_i + eps_i for the generators of `i`.
template <CoefficientField F>
Ideal<F> perturbed(const Ideal<F>& i, const std::vector<Polynomial<F>>& eps);

struct NakCheck {
  bool applicable = false;
  bool equal = false;
};

/// applicable iff every eps_i lies in m(I + J) locally; then I + J and
/// (f + eps) + J are compared at the origin and must agree. Requires I + J of
/// finite colength. Throws InvariantViolation if an applicable instance fails.
template <CoefficientField F>
NakCheck nak_equality_check(const Ideal<F>& i, const Ideal<F>& j, const std::vector<Polynomial<F>>& eps);

/// For m-primary I and epsilons of order >= T: applicable iff m^T is inside
/// m*I at the origin; then (f + eps) must equal I there.
template <CoefficientField F>
NakCheck nakcordim0_check(const Ideal<F>& i, const std::vector<Polynomial<F>>& eps, unsigned order);

struct ReductionCheck {
  /// Kred J^k + I = J^(k+1) + I at the origin.
  bool hypothesis = false;
  /// hypothesis holds and every eps_i lies in m(I + Kred^(k+1)).
  bool gated = false;
  /// Kred J^k + (f + eps) = J^(k+1) + (f + eps); only meaningful when gated.
  bool conclusion = false;
};

/// Requires Kred inside J and J of finite colength. Throws InvariantViolation
/// if a gated instance fails the conclusion.
template <CoefficientField F>
ReductionCheck reduction_stability_check(const Ideal<F>& i, const Ideal<F>& j, const Ideal<F>& kred, unsigned k,
                                         const std::vector<Polynomial<F>>& eps);

}  // namespace mperturb
