#include "mperturb/module.hpp"

#include "buchberger.hpp"

namespace mperturb {

template <CoefficientField F>
FreeModuleVector<F>::FreeModuleVector(RingPtr ring, std::size_t rank) : ring_(ring) {
  components_.assign(rank, Poly(ring_));
}

template <CoefficientField F>
FreeModuleVector<F>::FreeModuleVector(std::vector<Poly> components) : components_(std::move(components)) {
  if (components_.empty()) throw PreconditionError("a module vector built from components needs rank >= 1");
  ring_ = components_.front().ring();
}

template <CoefficientField F>
FreeModuleVector<F> FreeModuleVector<F>::basis_vector(RingPtr ring, std::size_t rank, std::size_t index) {
  FreeModuleVector v(ring, rank);
  v.components_.at(index) = Poly::constant(ring, ring->field().one());
  return v;
}

template <CoefficientField F>
bool FreeModuleVector<F>::is_zero() const noexcept {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

template <CoefficientField F>
FreeModuleVector<F> FreeModuleVector<F>::combine(const FreeModuleVector& b, bool subtract) const {
  if (rank() != b.rank()) throw PreconditionError("module vectors of different rank");
  FreeModuleVector out(ring_, rank());
  for (std::size_t i = 0; i < rank(); ++i) out.components_[i] = subtract ? components_[i] - b[i] : components_[i] + b[i];
  return out;
}

template <CoefficientField F>
FreeModuleVector<F> operator*(const Polynomial<F>& c, const FreeModuleVector<F>& v) {
  FreeModuleVector<F> out(v.ring(), v.rank());
  for (std::size_t i = 0; i < v.rank(); ++i) out[i] = c * v[i];
  return out;
}

template <CoefficientField F>
std::string FreeModuleVector<F>::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += ", ";
    out += components_[i].to_string();
  }
  return out + ")";
}

namespace {

template <CoefficientField F>
detail::SVec<F> to_svec(const FreeModuleVector<F>& v, const detail::ModuleArithmetic<F>& arith,
                        std::uint32_t offset = 0) {
  detail::SVec<F> out;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    for (const auto& t : v[i].terms()) out.push_back({t.monomial, static_cast<std::uint32_t>(i) + offset, t.coeff});
  }
  arith.sort(out);
  return out;
}

/// Components [first, first + rank) of v as a module vector.
template <CoefficientField F>
FreeModuleVector<F> from_svec(const typename PolyRing<F>::Ptr& ring, const detail::SVec<F>& v, std::size_t first,
                              std::size_t rank) {
  std::vector<std::vector<typename Polynomial<F>::Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp < first || t.comp >= first + rank) continue;
    parts[t.comp - first].push_back({t.mon, t.coeff});
  }
  FreeModuleVector<F> out(ring, rank);
  for (std::size_t i = 0; i < rank; ++i) out[i] = Polynomial<F>::from_terms(ring, std::move(parts[i]));
  return out;
}

template <CoefficientField F>
std::size_t common_rank(std::span<const FreeModuleVector<F>> vs) {
  const std::size_t r = vs.front().rank();
  for (const auto& v : vs) {
    if (v.rank() != r) throw PreconditionError("module vectors must share one rank");
    if (v.ring() != vs.front().ring() && !(*v.ring() == *vs.front().ring())) {
      throw PreconditionError("module vectors belong to different rings");
    }
  }
  return r;
}

}  // namespace

template <CoefficientField F>
std::vector<FreeModuleVector<F>> module_groebner(std::span<const FreeModuleVector<F>> vectors,
                                                 const GroebnerOptions& options) {
  if (vectors.empty()) return {};
  const std::size_t r = common_rank(vectors);
  const auto& ring = vectors.front().ring();
  detail::ModuleArithmetic<F> arith(*ring);
  std::vector<detail::SVec<F>> input;
  for (const auto& v : vectors) input.push_back(to_svec(v, arith));
  detail::Buchberger<F> engine(*ring, /*ideal_case=*/r == 1, options);
  std::vector<FreeModuleVector<F>> out;
  for (const auto& g : engine.run(std::move(input))) out.push_back(from_svec<F>(ring, g, 0, r));
  return out;
}

template <CoefficientField F>
FreeModuleVector<F> module_normal_form(const FreeModuleVector<F>& v, std::span<const FreeModuleVector<F>> gb,
                                       const GroebnerOptions& options) {
  const auto& ring = v.ring();
  detail::ModuleArithmetic<F> arith(*ring);
  std::vector<detail::SVec<F>> basis;
  for (const auto& g : gb) {
    if (g.rank() != v.rank()) throw PreconditionError("module normal form: rank mismatch");
    auto s = to_svec(g, arith);
    if (!s.empty()) basis.push_back(std::move(s));
  }
  std::vector<const detail::SVec<F>*> ptrs;
  for (const auto& b : basis) ptrs.push_back(&b);
  detail::StepBudget budget(options.max_steps);
  return from_svec<F>(ring, arith.reduce(to_svec(v, arith), ptrs, budget), 0, v.rank());
}

template <CoefficientField F>
bool is_module_groebner_basis(std::span<const FreeModuleVector<F>> basis) {
  if (basis.empty()) return true;
  common_rank(basis);
  const auto& ring = basis.front().ring();
  detail::ModuleArithmetic<F> arith(*ring);
  std::vector<detail::SVec<F>> vecs;
  for (const auto& b : basis) vecs.push_back(to_svec(b, arith));
  return detail::all_s_vectors_reduce(*ring, vecs);
}

template <CoefficientField F>
std::vector<FreeModuleVector<F>> module_syzygies(std::span<const FreeModuleVector<F>> vectors,
                                                 const GroebnerOptions& options) {
  if (vectors.empty()) return {};
  const std::size_t r = common_rank(vectors);
  const std::size_t s = vectors.size();
  const auto& ring = vectors.front().ring();
  detail::ModuleArithmetic<F> arith(*ring);
  std::vector<detail::SVec<F>> rows;
  rows.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    auto row = to_svec(vectors[i], arith);
    row.push_back({Monomial{}, static_cast<std::uint32_t>(r + i), ring->field().one()});
    arith.sort(row);
    rows.push_back(std::move(row));
  }
  detail::Buchberger<F> engine(*ring, /*ideal_case=*/false, options);
  std::vector<FreeModuleVector<F>> out;
  for (const auto& g : engine.run(std::move(rows))) {
    if (g.front().comp >= r) out.push_back(from_svec<F>(ring, g, r, s));
  }
  return out;
}

template <CoefficientField F>
std::vector<FreeModuleVector<F>> syzygies(std::span<const Polynomial<F>> gens, const GroebnerOptions& options) {
  std::vector<FreeModuleVector<F>> as_vectors;
  as_vectors.reserve(gens.size());
  for (const auto& g : gens) as_vectors.emplace_back(std::vector<Polynomial<F>>{g});
  return module_syzygies<F>(as_vectors, options);
}

#define MPERTURB_INSTANTIATE(F)                                                                                   \
  template class FreeModuleVector<F>;                                                                             \
  template FreeModuleVector<F> operator*(const Polynomial<F>&, const FreeModuleVector<F>&);                       \
  template std::vector<FreeModuleVector<F>> module_groebner<F>(std::span<const FreeModuleVector<F>>,              \
                                                               const GroebnerOptions&);                           \
  template FreeModuleVector<F> module_normal_form<F>(const FreeModuleVector<F>&,                                 \
                                                     std::span<const FreeModuleVector<F>>, const GroebnerOptions&); \
  template bool is_module_groebner_basis<F>(std::span<const FreeModuleVector<F>>);                                \
  template std::vector<FreeModuleVector<F>> syzygies<F>(std::span<const Polynomial<F>>, const GroebnerOptions&);  \
  template std::vector<FreeModuleVector<F>> module_syzygies<F>(std::span<const FreeModuleVector<F>>,              \
                                                               const GroebnerOptions&);

MPERTURB_INSTANTIATE(PrimeField)
MPERTURB_INSTANTIATE(RationalField)

#undef MPERTURB_INSTANTIATE

}  // namespace mperturb
