#include "mperturb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "mperturb/errors.hpp"

namespace mperturb {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

// ---------------------------------------------------------------------------
// PolyRing

template <CoefficientField F>
PolyRing<F>::PolyRing(F field, std::vector<std::string> names, MonomialOrder order)
    : field_(std::move(field)), names_(std::move(names)), order_(std::move(order)) {
  if (names_.size() > kMaxVariables) {
    throw PreconditionError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  if (order_.num_variables() != names_.size()) {
    throw PreconditionError("monomial order size does not match the number of variables");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw PreconditionError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw PreconditionError("duplicate variable name '" + n + "'");
  }
}

template <CoefficientField F>
typename PolyRing<F>::Ptr PolyRing<F>::make(F field, std::vector<std::string> names) {
  auto order = MonomialOrder::grevlex(names.size());
  return std::make_shared<const PolyRing>(std::move(field), std::move(names), std::move(order));
}

template <CoefficientField F>
typename PolyRing<F>::Ptr PolyRing<F>::make(F field, std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(field), std::move(names), std::move(order));
}

template <CoefficientField F>
std::optional<std::size_t> PolyRing<F>::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

template <CoefficientField F>
typename PolyRing<F>::Ptr PolyRing<F>::with_order(MonomialOrder order) const {
  return make(field_, names_, std::move(order));
}

template <CoefficientField F>
std::string PolyRing<F>::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Polynomial

template <CoefficientField F>
Polynomial<F>::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw PreconditionError("polynomial requires a ring");
}

template <CoefficientField F>
Polynomial<F>::Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
    : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::constant(RingPtr ring, Coeff c) {
  return monomial(std::move(ring), Monomial{}, std::move(c));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_variables()) throw PreconditionError("variable index out of range");
  const Coeff one = ring->field().one();
  return monomial(std::move(ring), Monomial::variable(index), one);
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
  return p;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  const auto& field = ring->field();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = field.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && field.is_zero(out.back().coeff)) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

template <CoefficientField F>
bool Polynomial<F>::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

template <CoefficientField F>
const typename Polynomial<F>::Term& Polynomial<F>::leading_term() const {
  if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
  return terms_.front();
}

template <CoefficientField F>
ExtendedNat Polynomial<F>::order() const noexcept {
  if (terms_.empty()) return ExtendedNat::infinity();
  std::uint32_t best = terms_.front().monomial.degree();
  for (const auto& t : terms_) best = std::min(best, t.monomial.degree());
  return ExtendedNat(best);
}

template <CoefficientField F>
unsigned Polynomial<F>::total_degree() const noexcept {
  unsigned best = 0;
  for (const auto& t : terms_) best = std::max<unsigned>(best, t.monomial.degree());
  return best;
}

template <CoefficientField F>
void Polynomial<F>::check_same_ring(const Polynomial& b) const {
  if (ring_ != b.ring_ && !(*ring_ == *b.ring_)) {
    throw PreconditionError("polynomials belong to different rings (field " + ring_->field().name() + " vs " +
                            b.ring_->field().name() + ")");
  }
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field().neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::combine(const Polynomial& b, bool subtract) const {
  check_same_ring(b);
  const auto& order = ring_->order();
  const auto& k = field();
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == terms_.size()) {
      c = -1;
    } else if (j == b.terms_.size()) {
      c = 1;
    } else {
      c = order.compare(terms_[i].monomial, b.terms_[j].monomial);
    }
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      const auto& t = b.terms_[j++];
      out.push_back({t.monomial, subtract ? k.neg(t.coeff) : t.coeff});
    } else {
      Coeff s = subtract ? k.sub(terms_[i].coeff, b.terms_[j].coeff) : k.add(terms_[i].coeff, b.terms_[j].coeff);
      if (!k.is_zero(s)) out.push_back({terms_[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Polynomial(ring_, std::move(out));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::multiply(const Polynomial& b) const {
  check_same_ring(b);
  if (is_zero() || b.is_zero()) return Polynomial(ring_);
  const auto& k = field();
  std::vector<Term> prod;
  prod.reserve(terms_.size() * b.terms_.size());
  for (const auto& s : terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, k.mul(s.coeff, t.coeff)});
  }
  return from_terms(ring_, std::move(prod));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::scaled(const Coeff& c) const {
  const auto& k = field();
  if (k.is_zero(c)) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = k.mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::shifted(const Monomial& m) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.monomial = t.monomial * m;
  return Polynomial(ring_, std::move(out));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::pow(unsigned k) const {
  Polynomial result = constant(ring_, field().one());
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(terms_.front().coeff));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::truncated_below(unsigned degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.degree() < degree) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

template <CoefficientField F>
Polynomial<F> Polynomial<F>::in_ring(RingPtr other) const {
  if (!(other->field() == field())) throw PreconditionError("cannot move a polynomial to a ring over another field");
  const auto& mine = ring_->names();
  const auto& theirs = other->names();
  if (theirs.size() < mine.size() || !std::equal(mine.begin(), mine.end(), theirs.begin())) {
    throw PreconditionError("target ring must extend the variable list of the source ring");
  }
  return from_terms(std::move(other), terms_);
}

template <CoefficientField F>
bool Polynomial<F>::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  const auto& k = field();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].monomial == other.terms_[i].monomial) || !k.equal(terms_[i].coeff, other.terms_[i].coeff)) {
      return false;
    }
  }
  return true;
}

template <CoefficientField F>
std::string Polynomial<F>::to_string() const {
  if (terms_.empty()) return "0";
  const auto& k = field();
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string c = k.to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (i == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += c;
    } else if (c == "1") {
      out += ring_->monomial_to_string(t.monomial);
    } else {
      out += c + '*' + ring_->monomial_to_string(t.monomial);
    }
  }
  return out;
}

template <CoefficientField F>
Polynomial<F> substitute(const Polynomial<F>& f, std::span<const Polynomial<F>> images) {
  const auto& ring = f.ring();
  if (images.size() != ring->num_variables()) throw PreconditionError("substitution needs one image per variable");
  Polynomial<F> result(images.empty() ? ring : images.front().ring());
  for (const auto& t : f.terms()) {
    Polynomial<F> term = Polynomial<F>::constant(result.ring(), t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (t.monomial[i] > 0) term = term * images[i].pow(t.monomial[i]);
    }
    result += term;
  }
  return result;
}

template class PolyRing<PrimeField>;
template class PolyRing<RationalField>;
template class Polynomial<PrimeField>;
template class Polynomial<RationalField>;
template Polynomial<PrimeField> substitute(const Polynomial<PrimeField>&, std::span<const Polynomial<PrimeField>>);
template Polynomial<RationalField> substitute(const Polynomial<RationalField>&,
                                              std::span<const Polynomial<RationalField>>);

}  // namespace mperturb
