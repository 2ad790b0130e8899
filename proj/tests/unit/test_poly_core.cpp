#include <gtest/gtest.h>

#include "mperturb/errors.hpp"
#include "support.hpp"

using namespace mperturb;
using namespace mperturb::testing;

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(1), PreconditionError);
  EXPECT_THROW(PrimeField(9), PreconditionError);
  EXPECT_NO_THROW(PrimeField(65521));
}

TEST(PrimeField, InversesAndNegatives) {
  const PrimeField f(101);
  for (std::uint32_t a = 1; a < 101; ++a) {
    EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.add(a, f.neg(a)), 0u);
  }
  EXPECT_THROW(f.inv(0), PreconditionError);
}

TEST(PrimeField, FractionsReduceModP) {
  const PrimeField f(7);
  EXPECT_EQ(f.from_fraction(1, 2), 4u);
  EXPECT_EQ(f.from_integer(-1), 6u);
  EXPECT_THROW(f.from_fraction(1, 7), PreconditionError);
}

TEST(Parser, ReadsTermsOverF5) {
  Fixture<Fp> r(Fp(5), {"x", "y", "t"});
  const auto f = r.P("x*y + t^3");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f, r.P("t^3 + y*x"));
  EXPECT_EQ(f.to_string(), "t^3 + x*y");
  EXPECT_EQ(r.P("t^3").leading_monomial(), Monomial::variable(2, 3));
}

TEST(Parser, MinusOneIsOneInF2) {
  Fixture<Fp> r(Fp(2), {"x", "y"});
  EXPECT_EQ(r.P("x^2 - y^3"), r.P("x^2 + y^3"));
}

TEST(Parser, ZeroPolynomialHasInfiniteOrder) {
  Fixture<Q> r(Q{}, {"x"});
  const auto z = r.P("0");
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.order().is_infinite());
  EXPECT_EQ(z.to_string(), "0");
}

TEST(Parser, RationalCoefficients) {
  Fixture<Q> r(Q{}, {"x", "y"});
  EXPECT_EQ(r.P("1/2*x + 1/2*x"), r.P("x"));
  EXPECT_EQ(r.P("3 * 2/6 * y"), r.P("y"));
}

TEST(Parser, ErrorsCarryOffsets) {
  Fixture<Q> r(Q{}, {"x", "y"});
  try {
    r.P("x + z");
    FAIL() << "expected a ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(r.P(""), ParseError);
  EXPECT_THROW(r.P("x^"), ParseError);
  EXPECT_THROW(r.P("x + + y"), ParseError);
  EXPECT_THROW(r.P("1/0"), ParseError);
  EXPECT_THROW(r.P("(x)"), ParseError);
}

TEST(Parser, ListsSplitOnCommas) {
  Fixture<Q> r(Q{}, {"x", "y", "t"});
  const auto list = r.Ps("x*y, x*t , y");
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[2], r.P("y"));
  EXPECT_TRUE(r.Ps("  ").empty());
}

TEST(Parser, PrintParseRoundTrip) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars = {"x", "y", "t"};
  Fixture<Q> q(Q{}, vars);
  Fixture<Fp> p(Fp(13), vars);
  for (int n = 0; n < 200; ++n) {
    const std::string text = random_poly_text(rng, vars, 0, 5, 1 + n % 5);
    const auto fq = q.P(text);
    EXPECT_EQ(q.P(fq.to_string()), fq) << text;
    const auto fp = p.P(text);
    EXPECT_EQ(p.P(fp.to_string()), fp) << text;
  }
}

TEST(PolyArith, DifferenceOfSquares) {
  Fixture<Q> r(Q{}, {"x", "y"});
  EXPECT_EQ(r.P("x + y") * r.P("x - y"), r.P("x^2 - y^2"));
}

TEST(PolyArith, FrobeniusInCharTwo) {
  Fixture<Fp> r(Fp(2), {"x", "y"});
  EXPECT_EQ(r.P("x + y").pow(2), r.P("x^2 + y^2"));
}

TEST(PolyArith, AdditiveIdentity) {
  Fixture<Q> r(Q{}, {"x", "y"});
  const auto f = r.P("3*x^2*y - 1/4");
  EXPECT_EQ(f + r.P("0"), f);
  EXPECT_TRUE((f - f).is_zero());
}

TEST(PolyArith, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(5);
  const std::vector<std::string> vars = {"x", "y", "z"};
  Fixture<Fp> r(Fp(7), vars);
  for (int n = 0; n < 100; ++n) {
    const auto a = r.P(random_poly_text(rng, vars, 0, 3, 3));
    const auto b = r.P(random_poly_text(rng, vars, 0, 3, 3));
    const auto c = r.P(random_poly_text(rng, vars, 0, 3, 3));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyArith, FrobeniusAdditivityOverF5) {
  std::mt19937_64 rng(9);
  const std::vector<std::string> vars = {"x", "y"};
  Fixture<Fp> r(Fp(5), vars);
  for (int n = 0; n < 30; ++n) {
    const auto a = r.P(random_poly_text(rng, vars, 0, 2, 2));
    const auto b = r.P(random_poly_text(rng, vars, 0, 2, 2));
    EXPECT_EQ((a + b).pow(5), a.pow(5) + b.pow(5));
  }
}

TEST(PolyArith, MixingRingsIsRejected) {
  Fixture<Q> r(Q{}, {"x"});
  Fixture<Q> s(Q{}, {"y"});
  EXPECT_THROW(r.P("x") + s.P("y"), PreconditionError);
}

TEST(PolyOrder, Examples) {
  Fixture<Q> r(Q{}, {"x", "y", "t"});
  EXPECT_EQ(r.P("t^5").order(), ExtendedNat(5));
  EXPECT_EQ(r.P("x*y + t^3").order(), ExtendedNat(2));
  EXPECT_EQ(r.P("1 + x").order(), ExtendedNat(0));
}

TEST(PolyOrder, ProductAddsOrders) {
  std::mt19937_64 rng(3);
  const std::vector<std::string> vars = {"x", "y"};
  Fixture<Q> r(Q{}, vars);
  for (int n = 0; n < 50; ++n) {
    const auto a = r.P(random_poly_text(rng, vars, 1, 4, 3));
    const auto b = r.P(random_poly_text(rng, vars, 1, 4, 3));
    EXPECT_EQ((a * b).order(), a.order() + b.order());
  }
}

TEST(MonomialOrder, GrevlexTieBreak) {
  const auto g = MonomialOrder::grevlex(3);
  const unsigned a[] = {1, 0, 1}, b[] = {0, 2, 0};
  // x*z < y^2 in grevlex with x > y > z.
  EXPECT_LT(g.compare(Monomial::from_exponents(a), Monomial::from_exponents(b)), 0);
  const auto l = MonomialOrder::lex(3);
  EXPECT_GT(l.compare(Monomial::from_exponents(a), Monomial::from_exponents(b)), 0);
}

TEST(MonomialOrder, MultiplicativeAndGlobal) {
  std::mt19937_64 rng(21);
  for (const auto& order : {MonomialOrder::grevlex(3), MonomialOrder::lex(3)}) {
    for (int n = 0; n < 200; ++n) {
      unsigned ea[3], eb[3], ec[3];
      for (int i = 0; i < 3; ++i) {
        ea[i] = uniform_below(rng, 4);
        eb[i] = uniform_below(rng, 4);
        ec[i] = uniform_below(rng, 4);
      }
      const auto u = Monomial::from_exponents(ea), v = Monomial::from_exponents(eb), w = Monomial::from_exponents(ec);
      EXPECT_EQ(order.compare(u, v) < 0, order.compare(u * w, v * w) < 0);
      EXPECT_LE(order.compare(Monomial{}, u), 0);
    }
  }
}

TEST(Presentation, DefiningIdealMustLieInMaximalIdeal) {
  EXPECT_THROW(Fixture<Q>(Q{}, {"x"}, {"x - 1"}), PreconditionError);
  EXPECT_NO_THROW(Fixture<Q>(Q{}, {"x", "y"}, {"x*y"}));
}
