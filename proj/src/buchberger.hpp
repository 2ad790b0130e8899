#pragma once

// Buchberger's algorithm over submodules of a finite free module S^r, with the
// ideal case as r = 1. Terms carry a component index; the module order is
// position-over-term with component 0 the largest.

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mperturb/errors.hpp"
#include "mperturb/groebner.hpp"
#include "mperturb/monomial.hpp"
#include "mperturb/polynomial.hpp"

namespace mperturb::detail {

template <CoefficientField F>
struct VTerm {
  Monomial mon;
  std::uint32_t comp;
  typename F::value_type coeff;
};

template <CoefficientField F>
using SVec = std::vector<VTerm<F>>;

class StepBudget {
 public:
  explicit StepBudget(std::uint64_t max_steps) : max_(max_steps) {}
  void step() {
    if (++used_ > max_) {
      throw BudgetExceeded("Groebner computation exceeded its budget of " + std::to_string(max_) +
                           " reduction steps");
    }
  }
  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t max_;
};

template <CoefficientField F>
class ModuleArithmetic {
 public:
  using Coeff = typename F::value_type;
  using Term = VTerm<F>;
  using Vec = SVec<F>;

  explicit ModuleArithmetic(const PolyRing<F>& ring) : ring_(ring), field_(ring.field()), order_(ring.order()) {}

  const F& field() const noexcept { return field_; }

  int compare(const Monomial& am, std::uint32_t ac, const Monomial& bm, std::uint32_t bc) const noexcept {
    if (ac != bc) return ac < bc ? 1 : -1;
    return order_.compare(am, bm);
  }
  int compare(const Term& a, const Term& b) const noexcept { return compare(a.mon, a.comp, b.mon, b.comp); }

  void sort(Vec& v) const {
    std::sort(v.begin(), v.end(), [this](const Term& a, const Term& b) { return compare(a, b) > 0; });
  }

  /// a - c * m * b for sorted ranges a and b.
  Vec sub_multiple(std::span<const Term> a, const Coeff& c, const Monomial& m, std::span<const Term> b) const {
    Vec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    Monomial bm;
    if (j < b.size()) bm = b[j].mon * m;
    while (i < a.size() || j < b.size()) {
      int cmp;
      if (i == a.size()) {
        cmp = -1;
      } else if (j == b.size()) {
        cmp = 1;
      } else {
        cmp = compare(a[i].mon, a[i].comp, bm, b[j].comp);
      }
      if (cmp > 0) {
        out.push_back(a[i++]);
        continue;
      }
      Coeff prod = field_.mul(c, b[j].coeff);
      if (cmp < 0) {
        out.push_back({bm, b[j].comp, field_.neg(prod)});
      } else {
        Coeff s = field_.sub(a[i].coeff, prod);
        if (!field_.is_zero(s)) out.push_back({bm, b[j].comp, std::move(s)});
        ++i;
      }
      if (++j < b.size()) bm = b[j].mon * m;
    }
    return out;
  }

  void make_monic(Vec& v) const {
    if (v.empty() || field_.is_one(v.front().coeff)) return;
    const Coeff inv = field_.inv(v.front().coeff);
    for (auto& t : v) t.coeff = field_.mul(t.coeff, inv);
  }

  /// (lcm / lt(g)) * g - (lcm / lt(h)) * h for monic g, h with equal leading component.
  Vec s_vector(const Vec& g, const Vec& h, const Monomial& l) const {
    Vec shifted_g;
    shifted_g.reserve(g.size());
    const Monomial mg = l / g.front().mon;
    for (std::size_t k = 1; k < g.size(); ++k) shifted_g.push_back({g[k].mon * mg, g[k].comp, g[k].coeff});
    const Coeff lc_h = h.front().coeff;
    const Coeff scale = field_.div(lc_h, g.front().coeff);
    if (!field_.is_one(scale)) {
      for (auto& t : shifted_g) t.coeff = field_.mul(t.coeff, scale);
    }
    return sub_multiple(shifted_g, field_.one(), l / h.front().mon, std::span<const Term>(h).subspan(1));
  }

  /// Full reduction of f modulo `basis` (each element with a nonzero leading term).
  Vec reduce(Vec f, std::span<const Vec* const> basis, StepBudget& budget) const {
    Vec remainder;
    std::size_t pos = 0;
    while (pos < f.size()) {
      const Term& t = f[pos];
      const Vec* divisor = nullptr;
      for (const Vec* g : basis) {
        const Term& lt = g->front();
        if (lt.comp == t.comp && lt.mon.divides(t.mon)) {
          divisor = g;
          break;
        }
      }
      if (divisor == nullptr) {
        remainder.push_back(std::move(f[pos]));
        ++pos;
        continue;
      }
      budget.step();
      const Term& lt = divisor->front();
      const Coeff c = field_.div(t.coeff, lt.coeff);
      const Monomial q = t.mon / lt.mon;
      f = sub_multiple(std::span<const Term>(f).subspan(pos + 1), c, q, std::span<const Term>(*divisor).subspan(1));
      pos = 0;
    }
    return remainder;
  }

 private:
  const PolyRing<F>& ring_;
  const F& field_;
  const MonomialOrder& order_;
};

/// Buchberger with the Gebauer-Moeller installation of the product and chain
/// criteria and the normal selection strategy (smallest lcm degree first).
/// The product criterion is only sound for ideals and is disabled otherwise.
template <CoefficientField F>
class Buchberger {
 public:
  using Vec = SVec<F>;

  Buchberger(const PolyRing<F>& ring, bool ideal_case, const GroebnerOptions& options)
      : arith_(ring), ideal_case_(ideal_case), options_(options), budget_(options.max_steps) {}

  std::vector<Vec> run(std::vector<Vec> gens) {
    std::erase_if(gens, [](const Vec& v) { return v.empty(); });
    std::sort(gens.begin(), gens.end(), [this](const Vec& a, const Vec& b) {
      return arith_.compare(a.front(), b.front()) < 0;
    });
    for (auto& g : gens) insert(arith_.reduce(std::move(g), active_basis(), budget_));

    std::uint64_t popped = 0;
    while (!pairs_.empty()) {
      Pair p = pairs_.back();
      pairs_.pop_back();
      if (options_.drop_pairs_for_testing && (popped++ % 2 == 1)) continue;
      Vec s = arith_.s_vector(polys_[p.i], polys_[p.j], p.lcm);
      insert(arith_.reduce(std::move(s), active_basis(), budget_));
    }
    return interreduce();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t comp;
  };

  std::vector<const Vec*> active_basis() const {
    std::vector<const Vec*> out;
    out.reserve(active_.size());
    for (std::size_t k : active_) out.push_back(&polys_[k]);
    return out;
  }

  /// True when a is to be processed after b.
  bool later(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() > b.lcm.degree();
    const int c = arith_.compare(a.lcm, a.comp, b.lcm, b.comp);
    if (c != 0) return c > 0;
    return std::tie(a.i, a.j) > std::tie(b.i, b.j);
  }

  void insert(Vec h) {
    if (h.empty()) return;
    arith_.make_monic(h);
    polys_.push_back(std::move(h));
    update(polys_.size() - 1);
  }

  void update(std::size_t h) {
    const auto& lh = polys_[h].front();
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool disjoint;
    };
    std::vector<Candidate> fresh;
    for (std::size_t g : active_) {
      const auto& lg = polys_[g].front();
      if (lg.comp != lh.comp) continue;
      fresh.push_back({g, lcm(lh.mon, lg.mon), ideal_case_ && coprime(lh.mon, lg.mon)});
    }
    std::vector<Candidate> kept;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      const auto& c = fresh[k];
      bool keep = c.disjoint;
      if (!keep) {
        keep = true;
        for (std::size_t r = k + 1; r < fresh.size() && keep; ++r) {
          if (fresh[r].lcm.divides(c.lcm)) keep = false;
        }
        for (std::size_t r = 0; r < kept.size() && keep; ++r) {
          if (kept[r].lcm.divides(c.lcm)) keep = false;
        }
      }
      if (keep) kept.push_back(c);
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.comp != lh.comp || !lh.mon.divides(p.lcm)) return false;
      const auto& li = polys_[p.i].front().mon;
      const auto& lj = polys_[p.j].front().mon;
      return !(lcm(li, lh.mon) == p.lcm) && !(lcm(lj, lh.mon) == p.lcm);
    });

    std::vector<Pair> added;
    for (const auto& c : kept) {
      if (!c.disjoint) added.push_back({c.g, h, c.lcm, lh.comp});
    }
    if (!added.empty()) {
      auto by_priority = [this](const Pair& a, const Pair& b) { return later(a, b); };
      std::sort(added.begin(), added.end(), by_priority);
      std::vector<Pair> merged;
      merged.reserve(pairs_.size() + added.size());
      std::merge(pairs_.begin(), pairs_.end(), added.begin(), added.end(), std::back_inserter(merged), by_priority);
      pairs_ = std::move(merged);
    }

    std::erase_if(active_, [&](std::size_t g) {
      const auto& lg = polys_[g].front();
      return lg.comp == lh.comp && lh.mon.divides(lg.mon);
    });
    active_.push_back(h);
  }

  std::vector<Vec> interreduce() {
    std::vector<Vec> basis;
    basis.reserve(active_.size());
    for (std::size_t k : active_) basis.push_back(polys_[k]);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const Vec*> others;
      for (std::size_t r = 0; r < basis.size(); ++r) {
        if (r != k) others.push_back(&basis[r]);
      }
      Vec tail(basis[k].begin() + 1, basis[k].end());
      Vec reduced = arith_.reduce(std::move(tail), others, budget_);
      reduced.insert(reduced.begin(), basis[k].front());
      basis[k] = std::move(reduced);
      arith_.make_monic(basis[k]);
    }
    std::sort(basis.begin(), basis.end(),
              [this](const Vec& a, const Vec& b) { return arith_.compare(a.front(), b.front()) > 0; });
    return basis;
  }

  ModuleArithmetic<F> arith_;
  bool ideal_case_;
  GroebnerOptions options_;
  StepBudget budget_;
  std::vector<Vec> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;  // sorted so that back() is processed next
};

/// Every S-vector of `basis` reduces to zero; no criteria applied.
template <CoefficientField F>
bool all_s_vectors_reduce(const PolyRing<F>& ring, const std::vector<SVec<F>>& basis) {
  ModuleArithmetic<F> arith(ring);
  StepBudget budget(~std::uint64_t{0});
  std::vector<const SVec<F>*> ptrs;
  for (const auto& b : basis) {
    if (b.empty()) return false;
    ptrs.push_back(&b);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].front().comp != basis[j].front().comp) continue;
      const Monomial l = lcm(basis[i].front().mon, basis[j].front().mon);
      if (!arith.reduce(arith.s_vector(basis[i], basis[j], l), ptrs, budget).empty()) return false;
    }
  }
  return true;
}

template <CoefficientField F>
SVec<F> to_svec(const Polynomial<F>& p, std::uint32_t comp = 0) {
  SVec<F> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.monomial, comp, t.coeff});
  return out;
}

template <CoefficientField F>
Polynomial<F> from_svec(const typename PolyRing<F>::Ptr& ring, const SVec<F>& v) {
  std::vector<typename Polynomial<F>::Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.mon, t.coeff});
  return Polynomial<F>::from_terms(ring, std::move(terms));
}

}  // namespace mperturb::detail
