#include "mperturb/groebner.hpp"

#include "buchberger.hpp"

namespace mperturb {

namespace {

template <CoefficientField F>
const typename PolyRing<F>::Ptr& common_ring(std::span<const Polynomial<F>> gens) {
  const auto& ring = gens.front().ring();
  for (const auto& g : gens) {
    if (g.ring() != ring && !(*g.ring() == *ring)) throw PreconditionError("generators belong to different rings");
  }
  return ring;
}

}  // namespace

template <CoefficientField F>
std::vector<Polynomial<F>> reduced_groebner(std::span<const Polynomial<F>> gens, const GroebnerOptions& options) {
  if (gens.empty()) return {};
  const auto& ring = common_ring(gens);
  std::vector<detail::SVec<F>> input;
  input.reserve(gens.size());
  for (const auto& g : gens) input.push_back(detail::to_svec(g));
  detail::Buchberger<F> engine(*ring, /*ideal_case=*/true, options);
  std::vector<Polynomial<F>> out;
  for (const auto& v : engine.run(std::move(input))) out.push_back(detail::from_svec<F>(ring, v));
  return out;
}

template <CoefficientField F>
std::vector<Polynomial<F>> reduced_groebner(std::span<const Polynomial<F>> gens, const MonomialOrder& order,
                                            const GroebnerOptions& options) {
  if (gens.empty()) return {};
  const auto target = gens.front().ring()->with_order(order);
  std::vector<Polynomial<F>> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(g.in_ring(target));
  return reduced_groebner<F>(moved, options);
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> gb, const GroebnerOptions& options) {
  if (gb.empty() || f.is_zero()) return f;
  std::vector<detail::SVec<F>> basis;
  basis.reserve(gb.size());
  for (const auto& g : gb) {
    if (g.is_zero()) continue;
    basis.push_back(detail::to_svec(g));
  }
  std::vector<const detail::SVec<F>*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  detail::ModuleArithmetic<F> arith(*f.ring());
  detail::StepBudget budget(options.max_steps);
  return detail::from_svec<F>(f.ring(), arith.reduce(detail::to_svec(f), ptrs, budget));
}

template <CoefficientField F>
bool is_groebner_basis(std::span<const Polynomial<F>> basis) {
  if (basis.empty()) return true;
  const auto& ring = common_ring(basis);
  std::vector<detail::SVec<F>> vecs;
  for (const auto& b : basis) vecs.push_back(detail::to_svec(b));
  return detail::all_s_vectors_reduce(*ring, vecs);
}

#define MPERTURB_INSTANTIATE(F)                                                                                    \
  template std::vector<Polynomial<F>> reduced_groebner<F>(std::span<const Polynomial<F>>, const GroebnerOptions&); \
  template std::vector<Polynomial<F>> reduced_groebner<F>(std::span<const Polynomial<F>>, const MonomialOrder&,   \
                                                          const GroebnerOptions&);                                 \
  template Polynomial<F> normal_form<F>(const Polynomial<F>&, std::span<const Polynomial<F>>,                     \
                                        const GroebnerOptions&);                                                   \
  template bool is_groebner_basis<F>(std::span<const Polynomial<F>>);

MPERTURB_INSTANTIATE(PrimeField)
MPERTURB_INSTANTIATE(RationalField)

#undef MPERTURB_INSTANTIATE

}  // namespace mperturb
