#include "mperturb/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>

#include "mperturb/errors.hpp"

namespace mperturb {

// ---------------------------------------------------------------------------
// RingPresentation

template <CoefficientField F>
RingPresentation<F>::RingPresentation(RingPtr ring, std::vector<Poly> defining_ideal, GroebnerOptions options)
    : ring_(std::move(ring)), options_(options) {
  for (auto& k : defining_ideal) {
    if (k.is_zero()) continue;
    if (!(*k.ring() == *ring_)) throw PreconditionError("defining ideal generator lives in a different ring");
    if (k.order() < ExtendedNat(1)) {
      throw PreconditionError("defining ideal generator " + k.to_string() +
                              " has a nonzero constant term; K must lie in the maximal ideal");
    }
    defining_.push_back(k.in_ring(ring_));
  }
}

template <CoefficientField F>
typename RingPresentation<F>::Ptr RingPresentation<F>::make(RingPtr ring, std::vector<Poly> defining_ideal,
                                                             GroebnerOptions options) {
  return std::make_shared<const RingPresentation>(std::move(ring), std::move(defining_ideal), options);
}

template <CoefficientField F>
typename RingPresentation<F>::Ptr RingPresentation<F>::with_order(const MonomialOrder& order) const {
  auto ring = ring_->with_order(order);
  std::vector<Poly> moved;
  for (const auto& k : defining_) moved.push_back(k.in_ring(ring));
  return make(ring, std::move(moved), options_);
}

template <CoefficientField F>
typename RingPresentation<F>::Ptr RingPresentation<F>::with_options(const GroebnerOptions& options) const {
  return make(ring_, defining_, options);
}

// ---------------------------------------------------------------------------
// Ideal

template <CoefficientField F>
struct Ideal<F>::Cache {
  std::optional<std::vector<Poly>> gb;
  std::optional<int> dimension;
  std::optional<ExtendedNat> colength;
};

template <CoefficientField F>
Ideal<F>::Ideal(PresPtr presentation, std::vector<Poly> generators)
    : pres_(std::move(presentation)), cache_(std::make_shared<Cache>()) {
  if (!pres_) throw PreconditionError("ideal requires a ring presentation");
  for (auto& g : generators) {
    if (!(*g.ring() == *pres_->ring())) throw PreconditionError("ideal generator lives in a different ring");
    if (!g.is_zero()) gens_.push_back(g.in_ring(pres_->ring()));
  }
}

template <CoefficientField F>
Ideal<F> Ideal<F>::zero(PresPtr presentation) {
  return Ideal(std::move(presentation), {});
}

template <CoefficientField F>
Ideal<F> Ideal<F>::unit(PresPtr presentation) {
  const auto& ring = presentation->ring();
  auto one = Poly::constant(ring, ring->field().one());
  return Ideal(std::move(presentation), {one});
}

template <CoefficientField F>
Ideal<F> Ideal<F>::maximal(PresPtr presentation) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < presentation->num_variables(); ++i) {
    gens.push_back(Poly::variable(presentation->ring(), i));
  }
  return Ideal(std::move(presentation), std::move(gens));
}

template <CoefficientField F>
Ideal<F> Ideal<F>::maximal_power(PresPtr presentation, unsigned n) {
  const auto& ring = presentation->ring();
  const std::size_t nv = ring->num_variables();
  const auto one = ring->field().one();
  std::vector<Poly> gens;
  if (nv == 0) return n == 0 ? unit(presentation) : zero(presentation);
  std::vector<unsigned> exps(nv, 0);
  // Enumerate compositions of n into nv parts.
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned remaining) {
    if (var + 1 == nv) {
      exps[var] = remaining;
      gens.push_back(Poly::monomial(ring, Monomial::from_exponents(exps), one));
      return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
      exps[var] = e;
      rec(var + 1, remaining - e);
    }
  };
  rec(0, n);
  return Ideal(std::move(presentation), std::move(gens));
}

template <CoefficientField F>
Ideal<F> Ideal<F>::variable_powers(PresPtr presentation, unsigned n) {
  if (n == 0) return unit(std::move(presentation));
  const auto& ring = presentation->ring();
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < ring->num_variables(); ++i) {
    gens.push_back(Poly::monomial(ring, Monomial::variable(i, n), ring->field().one()));
  }
  return Ideal(std::move(presentation), std::move(gens));
}

template <CoefficientField F>
std::vector<Polynomial<F>> Ideal<F>::preimage_generators() const {
  std::vector<Poly> all = pres_->defining_ideal();
  all.insert(all.end(), gens_.begin(), gens_.end());
  return all;
}

template <CoefficientField F>
const std::vector<Polynomial<F>>& Ideal<F>::groebner_basis() const {
  if (!cache_->gb) cache_->gb = reduced_groebner<F>(preimage_generators(), pres_->options());
  return *cache_->gb;
}

template <CoefficientField F>
std::vector<Monomial> Ideal<F>::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : groebner_basis()) out.push_back(g.leading_monomial());
  return out;
}

template <CoefficientField F>
Polynomial<F> Ideal<F>::normal_form(const Poly& f) const {
  return mperturb::normal_form<F>(f.in_ring(ring()), groebner_basis(), pres_->options());
}

template <CoefficientField F>
bool Ideal<F>::contains(const Poly& f) const {
  return normal_form(f).is_zero();
}

template <CoefficientField F>
bool Ideal<F>::contains(const Ideal& other) const {
  for (const auto& g : other.preimage_generators()) {
    if (!contains(g)) return false;
  }
  return true;
}

template <CoefficientField F>
bool Ideal<F>::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

template <CoefficientField F>
bool Ideal<F>::is_zero() const {
  Ideal k = zero(pres_);
  for (const auto& g : gens_) {
    if (!k.contains(g)) return false;
  }
  return true;
}

template <CoefficientField F>
int Ideal<F>::dimension() const {
  if (!cache_->dimension) {
    cache_->dimension = is_unit() ? -1 : dimension_of_monomial_ideal(leading_monomials(), pres_->num_variables());
  }
  return *cache_->dimension;
}

template <CoefficientField F>
ExtendedNat Ideal<F>::colength() const {
  if (cache_->colength) return *cache_->colength;
  const std::size_t nv = pres_->num_variables();
  ExtendedNat result;
  if (is_unit()) {
    result = 0;
  } else {
    const auto leads = leading_monomials();
    result = count_standard_monomials(leads, nv);
    if (result.is_finite() && nv > 0) {
      // Zero-dimensional. If some variable power x_i^L is missing, V(K + I)
      // has points besides the origin; adding all x_i^L isolates the origin
      // component because L bounds its local length.
      const auto bound = static_cast<unsigned>(result.value());
      const Ideal powers = variable_powers(pres_, bound);
      if (!contains(powers)) {
        const Ideal local = *this + powers;
        result = count_standard_monomials(local.leading_monomials(), nv);
      }
    }
  }
  cache_->colength = result;
  return result;
}

template <CoefficientField F>
Ideal<F> Ideal<F>::moved_to(PresPtr other) const {
  std::vector<Poly> moved;
  for (const auto& g : gens_) moved.push_back(g.in_ring(other->ring()));
  return Ideal(std::move(other), std::move(moved));
}

template <CoefficientField F>
std::string Ideal<F>::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i > 0) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Ideal arithmetic

namespace {

template <CoefficientField F>
void require_same_presentation(const Ideal<F>& a, const Ideal<F>& b) {
  if (a.presentation() != b.presentation() && !(*a.presentation() == *b.presentation())) {
    throw PreconditionError("ideals belong to different ring presentations");
  }
}

template <CoefficientField F>
void push_unique(std::vector<Polynomial<F>>& out, Polynomial<F> p) {
  if (p.is_zero()) return;
  p = p.monic();
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

/// (A : g) in S for an ideal A of S given by generators.
template <CoefficientField F>
std::vector<Polynomial<F>> colon_by_element(const std::vector<Polynomial<F>>& a_gens, const Polynomial<F>& g,
                                            const GroebnerOptions& options) {
  std::vector<Polynomial<F>> with_g = a_gens;
  with_g.push_back(g);
  std::vector<Polynomial<F>> out;
  for (const auto& s : syzygies<F>(with_g, options)) push_unique(out, s[s.rank() - 1]);
  return out;
}

/// A cap B in S for ideals of S given by generators.
template <CoefficientField F>
std::vector<Polynomial<F>> intersect_generators(const std::vector<Polynomial<F>>& a_gens,
                                                const std::vector<Polynomial<F>>& b_gens,
                                                const GroebnerOptions& options) {
  if (a_gens.empty() || b_gens.empty()) return {};
  std::vector<Polynomial<F>> both = a_gens;
  both.insert(both.end(), b_gens.begin(), b_gens.end());
  std::vector<Polynomial<F>> out;
  for (const auto& s : syzygies<F>(both, options)) {
    Polynomial<F> h(a_gens.front().ring());
    for (std::size_t i = 0; i < a_gens.size(); ++i) h += s[i] * a_gens[i];
    push_unique(out, std::move(h));
  }
  return out;
}

}  // namespace

template <CoefficientField F>
Ideal<F> operator+(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_presentation(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal<F>(a.presentation(), std::move(gens));
}

template <CoefficientField F>
Ideal<F> operator*(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_presentation(a, b);
  std::vector<Polynomial<F>> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) push_unique(gens, f * g);
  }
  return Ideal<F>(a.presentation(), std::move(gens));
}

template <CoefficientField F>
Ideal<F> power(const Ideal<F>& a, unsigned k) {
  if (k == 0) return Ideal<F>::unit(a.presentation());
  Ideal<F> result = a;
  for (unsigned i = 1; i < k; ++i) result = result * a;
  return result;
}

template <CoefficientField F>
Ideal<F> colon(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_presentation(a, b);
  const auto& options = a.presentation()->options();
  const std::vector<Polynomial<F>>& a_basis = a.groebner_basis();
  std::optional<std::vector<Polynomial<F>>> acc;
  for (const auto& g : b.generators()) {
    if (a.contains(g)) continue;
    auto part = colon_by_element(a_basis, g, options);
    acc = acc ? intersect_generators(*acc, part, options) : std::move(part);
  }
  if (!acc) return Ideal<F>::unit(a.presentation());
  return Ideal<F>(a.presentation(), std::move(*acc));
}

template <CoefficientField F>
Ideal<F> intersection(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_presentation(a, b);
  return Ideal<F>(a.presentation(),
                  intersect_generators(a.groebner_basis(), b.groebner_basis(), a.presentation()->options()));
}

template <CoefficientField F>
Ideal<F> bracket_power(const Ideal<F>& a, std::uint64_t q) {
  const std::uint32_t p = a.presentation()->field().characteristic();
  if (p == 0) throw PreconditionError("bracket powers need a field of positive characteristic");
  std::uint64_t r = q;
  while (r > 1 && r % p == 0) r /= p;
  if (q == 0 || r != 1) {
    throw PreconditionError(std::to_string(q) + " is not a power of the characteristic " + std::to_string(p));
  }
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(g.pow(static_cast<unsigned>(q)));
  return Ideal<F>(a.presentation(), std::move(gens));
}

template <CoefficientField F>
bool ideal_equal(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_presentation(a, b);
  return a.groebner_basis() == b.groebner_basis();
}

template <CoefficientField F>
bool locally_equal_at_origin(const Ideal<F>& a, const Ideal<F>& b) {
  require_same_presentation(a, b);
  const ExtendedNat len = a.colength();
  if (len.is_infinite()) {
    throw PreconditionError("local comparison needs an ideal of finite colength at the origin, got " + a.to_string());
  }
  const auto bound = static_cast<unsigned>(len.value());
  const auto powers = Ideal<F>::variable_powers(a.presentation(), bound);
  const auto next_powers = Ideal<F>::variable_powers(a.presentation(), bound + 1);
  const Ideal<F> b_local = b + powers;
  return ideal_equal(a + powers, b_local) && ideal_equal(b_local, b + next_powers);
}

template <CoefficientField F>
bool locally_contains(const Ideal<F>& a, const Polynomial<F>& f) {
  const ExtendedNat len = a.colength();
  if (len.is_infinite()) return a.contains(f);
  if (a.contains(f)) return true;
  return (a + Ideal<F>::variable_powers(a.presentation(), static_cast<unsigned>(len.value()))).contains(f);
}

// ---------------------------------------------------------------------------
// Monomial ideal invariants

namespace {

bool in_monomial_ideal(std::span<const Monomial> leading, const Monomial& m) {
  return std::any_of(leading.begin(), leading.end(), [&](const Monomial& l) { return l.divides(m); });
}

std::uint64_t count_below(std::span<const Monomial> leading, const std::vector<unsigned>& bounds, std::size_t var,
                          const Monomial& prefix) {
  const std::size_t nv = bounds.size();
  if (var + 1 == nv) {
    unsigned e = 0;
    while (e < bounds[var] && !in_monomial_ideal(leading, prefix * Monomial::variable(var, e))) ++e;
    return e;
  }
  std::uint64_t total = 0;
  for (unsigned e = 0; e < bounds[var]; ++e) {
    const Monomial m = prefix * Monomial::variable(var, e);
    if (in_monomial_ideal(leading, m)) break;
    total += count_below(leading, bounds, var + 1, m);
  }
  return total;
}

}  // namespace

ExtendedNat count_standard_monomials(std::span<const Monomial> leading, std::size_t num_vars) {
  if (in_monomial_ideal(leading, Monomial{})) return 0;
  if (num_vars == 0) return 1;
  std::vector<unsigned> bounds(num_vars, 0);
  for (const auto& l : leading) {
    std::size_t i;
    if (l.is_pure_power(i) && i < num_vars && (bounds[i] == 0 || l.degree() < bounds[i])) bounds[i] = l.degree();
  }
  if (std::find(bounds.begin(), bounds.end(), 0u) != bounds.end()) return ExtendedNat::infinity();
  return count_below(leading, bounds, 0, Monomial{});
}

int dimension_of_monomial_ideal(std::span<const Monomial> leading, std::size_t num_vars) {
  if (in_monomial_ideal(leading, Monomial{})) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& l : leading) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < num_vars; ++i) {
      if (l[i] > 0) mask |= 1u << i;
    }
    supports.push_back(mask);
  }
  int best = 0;
  const std::uint32_t full = num_vars == 32 ? ~0u : (1u << num_vars);
  for (std::uint32_t subset = 0; subset < full; ++subset) {
    const int size = std::popcount(subset);
    if (size <= best) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [&](std::uint32_t s) { return (s & ~subset) == 0; });
    if (independent) best = size;
  }
  return best;
}

#define MPERTURB_INSTANTIATE(F)                                                  \
  template class RingPresentation<F>;                                            \
  template class Ideal<F>;                                                       \
  template Ideal<F> operator+(const Ideal<F>&, const Ideal<F>&);                 \
  template Ideal<F> operator*(const Ideal<F>&, const Ideal<F>&);                 \
  template Ideal<F> power(const Ideal<F>&, unsigned);                            \
  template Ideal<F> colon(const Ideal<F>&, const Ideal<F>&);                     \
  template Ideal<F> intersection(const Ideal<F>&, const Ideal<F>&);              \
  template Ideal<F> bracket_power(const Ideal<F>&, std::uint64_t);               \
  template bool ideal_equal(const Ideal<F>&, const Ideal<F>&);                   \
  template bool locally_equal_at_origin(const Ideal<F>&, const Ideal<F>&);        \
  template bool locally_contains(const Ideal<F>&, const Polynomial<F>&);

MPERTURB_INSTANTIATE(PrimeField)
MPERTURB_INSTANTIATE(RationalField)

#undef MPERTURB_INSTANTIATE

}  // namespace mperturb
