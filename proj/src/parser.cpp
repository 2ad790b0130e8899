#include "mperturb/parser.hpp"

#include <cctype>
#include <string>

#include "mperturb/errors.hpp"

namespace mperturb {

namespace {

template <CoefficientField F>
class PolynomialParser {
 public:
  using Poly = Polynomial<F>;

  PolynomialParser(std::string_view text, const typename PolyRing<F>::Ptr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    Poly result(ring_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly t = term();
    result = negate ? -t : t;
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(std::string("unexpected character '") + op + "'", pos_);
      ++pos_;
      Poly next = term();
      result = op == '+' ? result + next : result - next;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      skip_space();
      if (at_end() || peek() != '*') return acc;
      ++pos_;
      acc = acc * factor();
    }
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly factor() {
    skip_space();
    if (at_end()) throw ParseError("expected a coefficient or variable", pos_);
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      mpz_class num(digits());
      mpz_class den(1);
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          throw ParseError("expected a denominator after '/'", pos_);
        }
        den = mpz_class(digits());
        if (den == 0) throw ParseError("zero denominator", start);
      }
      try {
        return Poly::constant(ring_, ring_->field().from_fraction(num, den));
      } catch (const ParseError&) {
        throw;
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), start);
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = ring_->index_of(name);
      if (!index) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      unsigned exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        const std::size_t exp_pos = pos_;
        const std::string e = digits();
        if (e.empty()) throw ParseError("expected a natural exponent after '^'", exp_pos);
        if (e.size() > 6) throw ParseError("exponent too large", exp_pos);
        exponent = static_cast<unsigned>(std::stoul(e));
      }
      return Poly::monomial(ring_, Monomial::variable(*index, exponent), ring_->field().one());
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const typename PolyRing<F>::Ptr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <CoefficientField F>
Polynomial<F> parse_polynomial(std::string_view text, const typename PolyRing<F>::Ptr& ring) {
  return PolynomialParser<F>(text, ring).parse();
}

template <CoefficientField F>
std::vector<Polynomial<F>> parse_polynomial_list(std::string_view text, const typename PolyRing<F>::Ptr& ring) {
  std::vector<Polynomial<F>> out;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    try {
      out.push_back(parse_polynomial<F>(piece, ring));
    } catch (const ParseError& e) {
      throw ParseError("in list item " + std::to_string(out.size() + 1) + ": " + e.reason(), start + e.position());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template Polynomial<PrimeField> parse_polynomial<PrimeField>(std::string_view, const PolyRing<PrimeField>::Ptr&);
template Polynomial<RationalField> parse_polynomial<RationalField>(std::string_view,
                                                                   const PolyRing<RationalField>::Ptr&);
template std::vector<Polynomial<PrimeField>> parse_polynomial_list<PrimeField>(std::string_view,
                                                                               const PolyRing<PrimeField>::Ptr&);
template std::vector<Polynomial<RationalField>> parse_polynomial_list<RationalField>(
    std::string_view, const PolyRing<RationalField>::Ptr&);

}  // namespace mperturb
