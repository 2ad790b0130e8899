#include "mperturb/perturbation.hpp"

#include <algorithm>
#include <set>

#include "mperturb/errors.hpp"

namespace mperturb {

std::mt19937_64 trial_engine(std::uint64_t seed, unsigned order, unsigned trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(order), static_cast<std::uint32_t>(trial)};
  return std::mt19937_64(seq);
}

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n) {
  if (n == 0) throw PreconditionError("uniform_below needs a positive bound");
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = engine();
    if (r >= threshold) return r % n;
  }
}

namespace {

mpz_class monomials_in_window(std::size_t nv, unsigned lo, unsigned hi) {
  mpz_class total = 0;
  for (unsigned d = lo; d <= hi; ++d) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), d + nv - 1, nv - 1);
    total += c;
  }
  return total;
}

/// Uniform monomial of degree d in nv variables (stars and bars).
Monomial random_monomial(std::mt19937_64& engine, std::size_t nv, unsigned d) {
  const std::uint64_t slots = d + nv - 1;
  std::set<std::uint64_t> bars;
  for (std::uint64_t j = slots - (nv - 1); j < slots; ++j) {
    const std::uint64_t pick = uniform_below(engine, j + 1);
    if (!bars.insert(pick).second) bars.insert(j);
  }
  std::vector<unsigned> exps;
  std::uint64_t prev = 0;
  for (std::uint64_t b : bars) {
    exps.push_back(static_cast<unsigned>(b - prev));
    prev = b + 1;
  }
  exps.push_back(static_cast<unsigned>(slots - prev));
  return Monomial::from_exponents(exps);
}

template <CoefficientField F>
typename F::value_type random_coefficient(std::mt19937_64& engine, const F& field) {
  for (;;) {
    const auto magnitude = static_cast<std::int64_t>(1 + uniform_below(engine, 3));
    const bool negative = uniform_below(engine, 2) == 1;
    auto c = field.from_integer(negative ? -magnitude : magnitude);
    if (!field.is_zero(c)) return c;
  }
}

template <CoefficientField F>
void require_order(const std::vector<Polynomial<F>>& eps, unsigned order) {
  for (const auto& e : eps) {
    if (e.order() < ExtendedNat(order)) {
      throw PreconditionError("perturbation " + e.to_string() + " has order below " + std::to_string(order));
    }
  }
}

}  // namespace

template <CoefficientField F>
std::vector<std::vector<Polynomial<F>>> sample_perturbation(const PerturbationSpec<F>& spec,
                                                            const typename RingPresentation<F>::Ptr& presentation,
                                                            std::size_t c) {
  if (spec.order < 1) throw PreconditionError("perturbation order T must be at least 1");
  const auto& ring = presentation->ring();
  if (const auto* fixed = std::get_if<std::vector<Polynomial<F>>>(&spec.mode)) {
    if (fixed->size() != c) {
      throw PreconditionError("expected " + std::to_string(c) + " perturbations, got " + std::to_string(fixed->size()));
    }
    std::vector<Polynomial<F>> eps;
    for (const auto& e : *fixed) eps.push_back(e.in_ring(ring));
    require_order(eps, spec.order);
    return {std::move(eps)};
  }
  const auto& random = std::get<RandomMode>(spec.mode);
  if (random.terms_per_eps == 0) throw PreconditionError("terms_per_eps must be at least 1");
  const std::size_t nv = ring->num_variables();
  if (nv == 0) throw PreconditionError("cannot sample perturbations in a ring without variables");
  if (monomials_in_window(nv, spec.order, spec.order + random.degree_window) > spec.monomial_cap) {
    throw PreconditionError("degree window [" + std::to_string(spec.order) + ", " +
                            std::to_string(spec.order + random.degree_window) + "] exceeds the monomial cap of " +
                            std::to_string(spec.monomial_cap));
  }
  std::vector<std::vector<Polynomial<F>>> out;
  for (unsigned trial = 0; trial < spec.trials; ++trial) {
    auto engine = trial_engine(random.seed, spec.order, trial);
    std::vector<Polynomial<F>> eps;
    for (std::size_t i = 0; i < c; ++i) {
      Polynomial<F> e(ring);
      while (e.is_zero()) {
        std::vector<typename Polynomial<F>::Term> terms;
        for (unsigned k = 0; k < random.terms_per_eps; ++k) {
          const auto d = spec.order + static_cast<unsigned>(uniform_below(engine, random.degree_window + 1));
          auto mono = random_monomial(engine, nv, d);
          terms.push_back({mono, random_coefficient(engine, ring->field())});
        }
        e = Polynomial<F>::from_terms(ring, std::move(terms));
      }
      eps.push_back(std::move(e));
    }
    require_order(eps, spec.order);
    out.push_back(std::move(eps));
  }
  return out;
}

template <CoefficientField F>
Ideal<F> perturbed(const Ideal<F>& i, const std::vector<Polynomial<F>>& eps) {
  const auto& gens = i.generators();
  if (eps.size() != gens.size()) {
    throw PreconditionError("need one perturbation per generator: " + std::to_string(gens.size()) + " generators, " +
                            std::to_string(eps.size()) + " perturbations");
  }
  std::vector<Polynomial<F>> moved;
  for (std::size_t k = 0; k < gens.size(); ++k) moved.push_back(gens[k] + eps[k].in_ring(i.ring()));
  return Ideal<F>(i.presentation(), std::move(moved));
}

template <CoefficientField F>
NakCheck nak_equality_check(const Ideal<F>& i, const Ideal<F>& j, const std::vector<Polynomial<F>>& eps) {
  const auto sum = i + j;
  if (sum.colength().is_infinite()) {
    throw PreconditionError("nak_equality_check needs I + J of finite colength at the origin");
  }
  const auto gate = Ideal<F>::maximal(i.presentation()) * sum;
  NakCheck out;
  out.applicable = std::all_of(eps.begin(), eps.end(), [&](const auto& e) { return locally_contains(gate, e); });
  const auto moved = perturbed(i, eps) + j;
  out.equal = locally_equal_at_origin(sum, moved);
  if (out.applicable && !out.equal) {
    throw InvariantViolation("I + J differs from (f + eps) + J although every eps_i lies in m(I + J): I = " +
                             i.to_string() + ", J = " + j.to_string());
  }
  return out;
}

template <CoefficientField F>
NakCheck nakcordim0_check(const Ideal<F>& i, const std::vector<Polynomial<F>>& eps, unsigned order) {
  if (i.colength().is_infinite()) throw PreconditionError("nakcordim0_check needs an m-primary ideal");
  require_order(eps, order);
  const auto mi = Ideal<F>::maximal(i.presentation()) * i;
  const auto mt = Ideal<F>::maximal_power(i.presentation(), order);
  NakCheck out;
  out.applicable = std::all_of(mt.generators().begin(), mt.generators().end(),
                               [&](const auto& g) { return locally_contains(mi, g); });
  out.equal = locally_equal_at_origin(i, perturbed(i, eps));
  if (out.applicable && !out.equal) {
    throw InvariantViolation("perturbation of order " + std::to_string(order) + " changed the m-primary ideal " +
                             i.to_string());
  }
  return out;
}

template <CoefficientField F>
ReductionCheck reduction_stability_check(const Ideal<F>& i, const Ideal<F>& j, const Ideal<F>& kred, unsigned k,
                                         const std::vector<Polynomial<F>>& eps) {
  if (!j.contains(kred)) throw PreconditionError("the reduction " + kred.to_string() + " is not contained in J");
  if (j.colength().is_infinite()) throw PreconditionError("reduction_stability_check needs J of finite colength");
  const auto jk = power(j, k);
  const auto jk1 = jk * j;
  ReductionCheck out;
  out.hypothesis = locally_equal_at_origin(jk1 + i, kred * jk + i);
  if (!out.hypothesis) return out;
  const auto gate = Ideal<F>::maximal(i.presentation()) * (i + power(kred, k + 1));
  out.gated = std::all_of(eps.begin(), eps.end(), [&](const auto& e) { return locally_contains(gate, e); });
  if (!out.gated) return out;
  const auto fe = perturbed(i, eps);
  out.conclusion = locally_equal_at_origin(jk1 + fe, kred * jk + fe);
  if (!out.conclusion) {
    throw InvariantViolation("reduction property lost under a gated perturbation: I = " + i.to_string() +
                             ", J = " + j.to_string() + ", K = " + kred.to_string());
  }
  return out;
}

#define MPERTURB_INSTANTIATE(F)                                                                           \
  template std::vector<std::vector<Polynomial<F>>> sample_perturbation<F>(                                \
      const PerturbationSpec<F>&, const typename RingPresentation<F>::Ptr&, std::size_t);                 \
  template Ideal<F> perturbed<F>(const Ideal<F>&, const std::vector<Polynomial<F>>&);                     \
  template NakCheck nak_equality_check<F>(const Ideal<F>&, const Ideal<F>&, const std::vector<Polynomial<F>>&); \
  template NakCheck nakcordim0_check<F>(const Ideal<F>&, const std::vector<Polynomial<F>>&, unsigned);    \
  template ReductionCheck reduction_stability_check<F>(const Ideal<F>&, const Ideal<F>&, const Ideal<F>&, \
                                                       unsigned, const std::vector<Polynomial<F>>&);

MPERTURB_INSTANTIATE(PrimeField)
MPERTURB_INSTANTIATE(RationalField)

#undef MPERTURB_INSTANTIATE

}  // namespace mperturb
