#include "mperturb/multiplicity.hpp"

#include <algorithm>
#include <map>

#include "mperturb/errors.hpp"

namespace mperturb {

std::string to_string(EstimateStatus status) {
  switch (status) {
    case EstimateStatus::exact_stabilized:
      return "exact-stabilized";
    case EstimateStatus::extrapolated:
      return "extrapolated";
    case EstimateStatus::undetermined:
      return "undetermined";
  }
  return "undetermined";
}

namespace {

template <CoefficientField F>
std::uint64_t finite_colength(const Ideal<F>& ideal, const char* what) {
  const ExtendedNat len = ideal.colength();
  if (len.is_infinite()) {
    throw PreconditionError(std::string(what) + " is not of finite colength at the origin: " + ideal.to_string());
  }
  return len.value();
}

template <CoefficientField F>
void require_inside_maximal(const Ideal<F>& j) {
  if (!Ideal<F>::maximal(j.presentation()).contains(j)) {
    throw PreconditionError("J must lie in the maximal ideal at the origin: " + j.to_string());
  }
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpq_class pow_q(std::uint64_t q, int a) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, static_cast<unsigned long>(std::max(a, 0)));
  return a >= 0 ? mpq_class(out) : mpq_class(1, q);
}

}  // namespace

template <CoefficientField F>
MultiplicityEstimate hs_multiplicity(const Ideal<F>& i, const Ideal<F>& j, unsigned n_max) {
  require_inside_maximal(j);
  finite_colength(i + j, "K + I + J");
  const int a = i.dimension();
  if (a < 1) {
    throw PreconditionError("Hilbert-Samuel multiplicity needs dim S/(K + I) >= 1 (got " + std::to_string(a) +
                            "); use the colength directly");
  }
  MultiplicityEstimate est;
  est.sequence.kind = SequenceKind::hilbert_samuel;
  est.sequence.dimension = a;
  est.sequence.j_generators = j.generators().size();
  unsigned onset = 0;
  for (const auto& g : i.groebner_basis()) onset = std::max(onset, g.total_degree());
  Ideal<F> jn = j;
  for (unsigned n = 1; n <= n_max; ++n) {
    if (n > 1) jn = jn * j;
    try {
      est.sequence.values.push_back(finite_colength(i + jn, "K + I + J^n"));
    } catch (const BudgetExceeded& e) {
      est.sequence.budget_exhausted = e.what();
      break;
    }
    est.sequence.normalizers.push_back(n);
    if (n == 1) est.sequence.base_colength = est.sequence.values.front();
    const auto& v = est.sequence.values;
    if (v.size() < static_cast<std::size_t>(a) + 1) continue;
    mpz_class diff = 0;
    for (int k = 0; k <= a; ++k) {
      const mpz_class term = binomial(a, k) * mpz_class(static_cast<unsigned long>(v[v.size() - 1 - k]));
      diff += (k % 2 == 0) ? term : mpz_class(-term);
    }
    est.evidence.emplace_back(diff);
    const auto& ev = est.evidence;
    const bool past_onset = n >= onset + static_cast<unsigned>(a) + 1;
    if (past_onset && ev.size() >= 2 && ev[ev.size() - 1] == ev[ev.size() - 2] && ev.back() > 0) {
      est.value = ev.back();
      est.status = EstimateStatus::exact_stabilized;
      return est;
    }
  }
  if (!est.evidence.empty()) est.value = est.evidence.back();
  return est;
}

template <CoefficientField F>
LengthSequence hk_sequence(const Ideal<F>& i, const Ideal<F>& j, unsigned e_max) {
  const std::uint32_t p = i.presentation()->field().characteristic();
  if (p == 0) throw PreconditionError("Hilbert-Kunz sequences need a field of positive characteristic");
  LengthSequence seq;
  seq.kind = SequenceKind::hilbert_kunz;
  seq.characteristic = p;
  seq.dimension = i.dimension();
  seq.j_generators = j.generators().size();
  require_inside_maximal(j);
  seq.base_colength = finite_colength(i + j, "K + I + J");
  std::uint64_t q = 1;
  for (unsigned e = 1; e <= e_max; ++e) {
    if (q > (std::uint64_t{1} << 31) / p) throw PreconditionError("Frobenius power p^e exceeds 2^31");
    q *= p;
    try {
      seq.values.push_back(finite_colength(i + bracket_power(j, q), "K + I + J^[q]"));
    } catch (const BudgetExceeded& e) {
      seq.budget_exhausted = e.what();
      break;
    }
    seq.normalizers.push_back(q);
  }
  return seq;
}

MultiplicityEstimate hk_estimate(const LengthSequence& seq, int a) {
  MultiplicityEstimate est;
  est.sequence = seq;
  const std::size_t n = seq.values.size();
  for (std::size_t e = 0; e < n; ++e) {
    est.evidence.push_back(mpq_class(mpz_class(static_cast<unsigned long>(seq.values[e]))) /
                           pow_q(seq.normalizers[e], a));
  }
  if (n == 0) return est;
  est.value = est.evidence.back();
  if (n < 2) return est;
  if (est.evidence[n - 1] == est.evidence[n - 2]) {
    est.status = EstimateStatus::exact_stabilized;
    return est;
  }
  est.status = EstimateStatus::extrapolated;
  if (a == 0) return est;
  // Normal equations for l ~ c0 * u + c1 * w with u = q^a, w = q^(a-1).
  const std::size_t first = n >= 3 ? n - 3 : 0;
  mpq_class suu = 0, suw = 0, sww = 0, sul = 0, swl = 0;
  for (std::size_t e = first; e < n; ++e) {
    const mpq_class u = pow_q(seq.normalizers[e], a);
    const mpq_class w = pow_q(seq.normalizers[e], a - 1);
    const mpq_class l(mpz_class(static_cast<unsigned long>(seq.values[e])));
    suu += u * u;
    suw += u * w;
    sww += w * w;
    sul += u * l;
    swl += w * l;
  }
  const mpq_class det = suu * sww - suw * suw;
  if (det == 0) return est;
  est.value = (sul * sww - swl * suw) / det;
  return est;
}

bool satisfies_filtration_bound(const LengthSequence& seq) {
  for (std::size_t e = 0; e < seq.values.size(); ++e) {
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), seq.normalizers[e], seq.j_generators);
    bound *= static_cast<unsigned long>(seq.base_colength);
    if (mpz_class(static_cast<unsigned long>(seq.values[e])) > bound) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Box oracle

namespace {

template <CoefficientField F>
class SparseEchelon {
 public:
  using Coeff = typename F::value_type;
  using Row = std::vector<std::pair<std::uint32_t, Coeff>>;

  explicit SparseEchelon(const F& field) : field_(field) {}

  /// Reduces `row` (sorted by column, nonzero entries) against the pivots and
  /// stores it as a new pivot row when something survives.
  void insert(Row row) {
    while (!row.empty()) {
      const auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        const Coeff inv = field_.inv(row.front().second);
        for (auto& entry : row) entry.second = field_.mul(entry.second, inv);
        pivots_.emplace(row.front().first, std::move(row));
        return;
      }
      row = subtract(row, row.front().second, it->second);
    }
  }

  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  Row subtract(const Row& a, const Coeff& c, const Row& b) const {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i == a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, field_.neg(field_.mul(c, b[j].second)));
        ++j;
      } else {
        Coeff v = field_.sub(a[i].second, field_.mul(c, b[j].second));
        if (!field_.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  const F& field_;
  std::map<std::uint32_t, Row> pivots_;
};

}  // namespace

template <CoefficientField F>
std::uint64_t colength_box_oracle(const Ideal<F>& i, const std::vector<unsigned>& box, std::uint64_t max_box) {
  const auto& ring = i.ring();
  const std::size_t nv = ring->num_variables();
  if (box.size() != nv) throw PreconditionError("box needs one bound per variable");
  std::uint64_t size = 1;
  for (unsigned b : box) {
    if (b == 0) throw PreconditionError("box bounds must be positive");
    size *= b;
    if (size > max_box) throw PreconditionError("box has more than " + std::to_string(max_box) + " monomials");
  }
  for (std::size_t v = 0; v < nv; ++v) {
    const auto power = Polynomial<F>::monomial(ring, Monomial::variable(v, box[v]), ring->field().one());
    if (!i.contains(power)) {
      throw PreconditionError("box precondition violated: " + power.to_string() + " is not in K + I");
    }
  }

  auto index_of = [&](const Monomial& m) -> std::optional<std::uint32_t> {
    std::uint64_t idx = 0;
    for (std::size_t v = 0; v < nv; ++v) {
      if (m[v] >= box[v]) return std::nullopt;
      idx = idx * box[v] + m[v];
    }
    return static_cast<std::uint32_t>(idx);
  };

  std::vector<Monomial> box_monomials;
  box_monomials.reserve(size);
  std::vector<unsigned> exps(nv, 0);
  for (std::uint64_t k = 0; k < size; ++k) {
    box_monomials.push_back(Monomial::from_exponents(exps));
    for (std::size_t v = nv; v-- > 0;) {
      if (++exps[v] < box[v]) break;
      exps[v] = 0;
    }
  }

  SparseEchelon<F> echelon(ring->field());
  for (const auto& g : i.preimage_generators()) {
    for (const auto& m : box_monomials) {
      typename SparseEchelon<F>::Row row;
      for (const auto& t : g.terms()) {
        if (auto idx = index_of(t.monomial * m)) row.emplace_back(*idx, t.coeff);
      }
      if (row.empty()) continue;
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      echelon.insert(std::move(row));
    }
  }
  return size - echelon.rank();
}

// ---------------------------------------------------------------------------
// Root adjunction

template <CoefficientField F>
RootAdjunction<F> adjoin_roots(const typename RingPresentation<F>::Ptr& presentation,
                               const std::vector<Polynomial<F>>& f, const std::vector<unsigned>& n) {
  if (f.size() != n.size()) throw PreconditionError("adjoin_roots needs one exponent per element");
  const auto& base = presentation->ring();
  std::vector<std::string> names = base->names();
  RootAdjunction<F> out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (n[k] == 0) throw PreconditionError("root exponents must be at least 1");
    if (f[k].order() < ExtendedNat(1)) {
      throw PreconditionError("cannot adjoin a root of " + f[k].to_string() + ": it has a nonzero constant term");
    }
    std::string name = f.size() == 1 ? "u" : "u" + std::to_string(k + 1);
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    names.push_back(name);
    out.root_names.push_back(name);
  }
  auto ring = PolyRing<F>::make(base->field(), names);
  std::vector<Polynomial<F>> defining;
  for (const auto& k : presentation->defining_ideal()) defining.push_back(k.in_ring(ring));
  const std::size_t first_root = base->num_variables();
  for (std::size_t k = 0; k < f.size(); ++k) {
    defining.push_back(Polynomial<F>::variable(ring, first_root + k).pow(n[k]) - f[k].in_ring(ring));
  }
  out.presentation = RingPresentation<F>::make(ring, std::move(defining), presentation->options());
  return out;
}

#define MPERTURB_INSTANTIATE(F)                                                                               \
  template MultiplicityEstimate hs_multiplicity<F>(const Ideal<F>&, const Ideal<F>&, unsigned);               \
  template LengthSequence hk_sequence<F>(const Ideal<F>&, const Ideal<F>&, unsigned);                         \
  template std::uint64_t colength_box_oracle<F>(const Ideal<F>&, const std::vector<unsigned>&, std::uint64_t); \
  template struct RootAdjunction<F>;                                                                          \
  template RootAdjunction<F> adjoin_roots<F>(const typename RingPresentation<F>::Ptr&,                        \
                                             const std::vector<Polynomial<F>>&, const std::vector<unsigned>&);

MPERTURB_INSTANTIATE(PrimeField)
MPERTURB_INSTANTIATE(RationalField)

#undef MPERTURB_INSTANTIATE

}  // namespace mperturb
