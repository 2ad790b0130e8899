#include "mperturb/koszul.hpp"

#include <optional>

#include "mperturb/errors.hpp"

namespace mperturb {

template <CoefficientField F>
bool KoszulData<F>::composition_vanishes() const {
  for (const auto& column : d2) {
    Polynomial<F> sum(presentation->ring());
    for (std::size_t i = 0; i < column.rank(); ++i) sum += d1[i] * column[i];
    if (!sum.is_zero()) return false;
  }
  return true;
}

namespace {

template <CoefficientField F>
std::vector<Polynomial<F>> prepare_generators(const typename RingPresentation<F>::Ptr& pres,
                                              std::vector<Polynomial<F>> f) {
  if (f.empty()) throw PreconditionError("the Koszul complex needs at least one generator");
  for (auto& g : f) {
    if (!(*g.ring() == *pres->ring())) throw PreconditionError("Koszul generator lives in a different ring");
    g = g.in_ring(pres->ring());
  }
  return f;
}

template <CoefficientField F>
void check_minimal_at_origin(const typename RingPresentation<F>::Ptr& pres, const std::vector<Polynomial<F>>& f) {
  const auto m = Ideal<F>::maximal(pres);
  const auto mi = m * Ideal<F>(pres, f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].order() < ExtendedNat(1)) {
      throw PreconditionError("generator " + f[i].to_string() + " is a unit at the origin; I must lie in m");
    }
    std::vector<Polynomial<F>> others;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j != i) others.push_back(f[j]);
    }
    const auto rest = mi + Ideal<F>(pres, std::move(others));
    if (rest.contains(f[i])) {
      throw PreconditionError("generators are not minimal at the origin: " + f[i].to_string() +
                              " lies in K + m*I + (other generators)");
    }
  }
}

template <CoefficientField F>
bool module_contains_all(std::span<const FreeModuleVector<F>> gens, std::span<const FreeModuleVector<F>> elems,
                         const GroebnerOptions& options) {
  if (elems.empty()) return true;
  const auto gb = module_groebner<F>(gens, options);
  for (const auto& v : elems) {
    if (v.is_zero()) continue;
    if (!module_normal_form<F>(v, gb, options).is_zero()) return false;
  }
  return true;
}

}  // namespace

template <CoefficientField F>
KoszulData<F> koszul_complex(typename RingPresentation<F>::Ptr presentation, std::vector<Polynomial<F>> f) {
  f = prepare_generators(presentation, std::move(f));
  const auto& ring = presentation->ring();
  const std::size_t c = f.size();
  FreeModuleVector<F> d1(f);
  std::vector<FreeModuleVector<F>> d2;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      FreeModuleVector<F> column(ring, c);
      column[i] = f[j];
      column[j] = -f[i];
      d2.push_back(std::move(column));
    }
  }
  return KoszulData<F>{std::move(presentation), std::move(f), std::move(d1), std::move(d2)};
}

template <CoefficientField F>
bool Subquotient<F>::is_zero() const {
  return module_contains_all<F>(boundaries, cycles, presentation->options());
}

template <CoefficientField F>
Subquotient<F> koszul_h1(typename RingPresentation<F>::Ptr presentation, std::vector<Polynomial<F>> f) {
  f = prepare_generators(presentation, std::move(f));
  check_minimal_at_origin(presentation, f);
  const auto& ring = presentation->ring();
  const auto& options = presentation->options();
  const std::size_t c = f.size();

  auto data = koszul_complex(presentation, f);
  if (!data.composition_vanishes()) throw InvariantViolation("Koszul differentials do not compose to zero");

  Subquotient<F> h;
  h.presentation = presentation;
  h.rank = c;
  h.minimality_verified_at_origin = true;

  // Z: first c coordinates of the syzygies of (f_1..f_c, k_1..k_m) over S.
  std::vector<Polynomial<F>> extended = f;
  const auto& k = presentation->defining_ideal();
  extended.insert(extended.end(), k.begin(), k.end());
  for (const auto& s : syzygies<F>(extended, options)) {
    FreeModuleVector<F> z(ring, c);
    for (std::size_t i = 0; i < c; ++i) z[i] = s[i];
    if (!z.is_zero()) h.cycles.push_back(std::move(z));
  }

  // B: Koszul relations plus K * S^c.
  h.boundaries = std::move(data.d2);
  for (const auto& kk : k) {
    for (std::size_t i = 0; i < c; ++i) {
      FreeModuleVector<F> v(ring, c);
      v[i] = kk;
      h.boundaries.push_back(std::move(v));
    }
  }
  if (!module_contains_all<F>(h.cycles, h.boundaries, options)) {
    throw InvariantViolation("Koszul boundaries are not contained in the cycles");
  }
  return h;
}

template <CoefficientField F>
Ideal<F> h1_annihilator(const Subquotient<F>& h) {
  const auto& pres = h.presentation;
  const auto& options = pres->options();
  std::optional<Ideal<F>> acc;
  std::vector<FreeModuleVector<F>> boundary_gb;
  if (!h.boundaries.empty()) boundary_gb = module_groebner<F>(h.boundaries, options);
  for (const auto& z : h.cycles) {
    if (!boundary_gb.empty() && module_normal_form<F>(z, boundary_gb, options).is_zero()) continue;
    std::vector<FreeModuleVector<F>> vectors = boundary_gb;
    vectors.push_back(z);
    std::vector<Polynomial<F>> colon_gens;
    for (const auto& s : module_syzygies<F>(vectors, options)) {
      const auto& last = s[s.rank() - 1];
      if (!last.is_zero()) colon_gens.push_back(last);
    }
    Ideal<F> part(pres, std::move(colon_gens));
    acc = acc ? intersection(*acc, part) : std::move(part);
  }
  if (!acc) return Ideal<F>::unit(pres);
  return Ideal<F>(pres, acc->groebner_basis());
}

template <CoefficientField F>
H1Condition h1_condition(typename RingPresentation<F>::Ptr presentation, std::vector<Polynomial<F>> f) {
  const auto h = koszul_h1(presentation, f);
  H1Condition out;
  out.dim_quotient = Ideal<F>(presentation, f).dimension();
  out.dim_h1 = h1_annihilator(h).dimension();
  out.trivially = out.dim_quotient == 0;
  out.holds = out.trivially || out.dim_h1 < out.dim_quotient;
  return out;
}

#define MPERTURB_INSTANTIATE(F)                                                                          \
  template struct KoszulData<F>;                                                                         \
  template struct Subquotient<F>;                                                                        \
  template KoszulData<F> koszul_complex<F>(typename RingPresentation<F>::Ptr, std::vector<Polynomial<F>>); \
  template Subquotient<F> koszul_h1<F>(typename RingPresentation<F>::Ptr, std::vector<Polynomial<F>>);     \
  template Ideal<F> h1_annihilator<F>(const Subquotient<F>&);                                            \
  template H1Condition h1_condition<F>(typename RingPresentation<F>::Ptr, std::vector<Polynomial<F>>);

MPERTURB_INSTANTIATE(PrimeField)
MPERTURB_INSTANTIATE(RationalField)

#undef MPERTURB_INSTANTIATE

}  // namespace mperturb
