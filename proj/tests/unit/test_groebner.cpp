#include <gtest/gtest.h>

#include <algorithm>

#include "mperturb/errors.hpp"
#include "mperturb/groebner.hpp"
#include "mperturb/module.hpp"
#include "support.hpp"

using namespace mperturb;
using namespace mperturb::testing;

namespace {

const std::vector<std::string> kXYT = {"x", "y", "t"};

template <CoefficientField F>
std::vector<Polynomial<F>> gb_of(const Fixture<F>& r, const std::string& text) {
  const auto gens = r.Ps(text);
  return reduced_groebner<F>(gens);
}

}  // namespace

TEST(ReducedGroebner, MonomialIdealIsItsOwnBasis) {
  Fixture<Q> r(Q{}, kXYT);
  const auto gb = gb_of(r, "x*y, x*t");
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], r.P("x*y"));
  EXPECT_EQ(gb[1], r.P("x*t"));
}

TEST(ReducedGroebner, InterreducesLinearForms) {
  Fixture<Q> r(Q{}, kXYT);
  const auto gb = gb_of(r, "x - y, y");
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_EQ(gb[0], r.P("x"));
  EXPECT_EQ(gb[1], r.P("y"));
}

TEST(ReducedGroebner, ConfluentAndContainsInputs) {
  Fixture<Fp> r(Fp(3), kXYT);
  const auto gens = r.Ps("x*y + t^2, x^2");
  const auto gb = reduced_groebner<Fp>(gens);
  EXPECT_TRUE(is_groebner_basis<Fp>(gb));
  for (const auto& g : gens) EXPECT_TRUE(normal_form<Fp>(g, gb).is_zero());
}

TEST(ReducedGroebner, UnitAndZeroIdeals) {
  Fixture<Q> r(Q{}, kXYT);
  const auto unit = gb_of(r, "x + 1, x");
  ASSERT_EQ(unit.size(), 1u);
  EXPECT_TRUE(unit[0].is_constant());
  std::vector<Polynomial<Q>> none;
  EXPECT_TRUE(reduced_groebner<Q>(none).empty());
}

TEST(ReducedGroebner, BudgetIsEnforced) {
  Fixture<Q> r(Q{}, kXYT);
  const auto gens = r.Ps("x^5*y^3 - t^7, x^3*t^2 - y^5, y^2*t^3 - x");
  EXPECT_THROW(reduced_groebner<Q>(gens, GroebnerOptions{3, false}), BudgetExceeded);
}

TEST(ReducedGroebner, MutationBreaksConfluence) {
  std::mt19937_64 rng(2);
  Fixture<Fp> r(Fp(7), kXYT);
  int broken = 0;
  for (int n = 0; n < 40; ++n) {
    std::vector<Polynomial<Fp>> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(r.P(random_poly_text(rng, kXYT, 1, 3, 2)));
    if (!is_groebner_basis<Fp>(reduced_groebner<Fp>(gens, GroebnerOptions{1'000'000, true}))) ++broken;
  }
  EXPECT_GT(broken, 0);
}

TEST(ReducedGroebner, PropertiesOnRandomIdeals) {
  std::mt19937_64 rng(17);
  Fixture<Fp> r(Fp(31), kXYT);
  for (int n = 0; n < 60; ++n) {
    std::vector<Polynomial<Fp>> gens;
    const int count = 2 + n % 3;
    for (int g = 0; g < count; ++g) gens.push_back(r.P(random_poly_text(rng, kXYT, 1, 3, 1 + n % 3)));
    const auto gb = reduced_groebner<Fp>(gens);
    ASSERT_TRUE(is_groebner_basis<Fp>(gb));
    // Reduced: monic, and no leading monomial divides any term of another element.
    for (std::size_t a = 0; a < gb.size(); ++a) {
      EXPECT_TRUE(r.pres->ring()->field().is_one(gb[a].leading_term().coeff));
      for (std::size_t b = 0; b < gb.size(); ++b) {
        if (a == b) continue;
        for (const auto& term : gb[b].terms()) EXPECT_FALSE(gb[a].leading_monomial().divides(term.monomial));
      }
    }
    // Permutation invariance.
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(reduced_groebner<Fp>(shuffled), gb);
    // Membership oracle: random combinations of generators reduce to zero.
    for (int k = 0; k < 3; ++k) EXPECT_TRUE(normal_form<Fp>(random_combination(rng, gens, kXYT), gb).is_zero());
  }
}

TEST(ReducedGroebner, LexAndGrevlexDescribeTheSameIdeal) {
  std::mt19937_64 rng(23);
  Fixture<Fp> r(Fp(11), kXYT);
  for (int n = 0; n < 25; ++n) {
    std::vector<Polynomial<Fp>> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(r.P(random_poly_text(rng, kXYT, 1, 2, 2)));
    const auto grevlex = reduced_groebner<Fp>(gens);
    const auto lex = reduced_groebner<Fp>(gens, MonomialOrder::lex(3));
    ASSERT_TRUE(is_groebner_basis<Fp>(lex));
    for (const auto& g : lex) EXPECT_TRUE(normal_form<Fp>(g.in_ring(r.pres->ring()), grevlex).is_zero());
    const auto lex_ring = lex.front().ring();
    for (const auto& g : grevlex) EXPECT_TRUE(normal_form<Fp>(g.in_ring(lex_ring), lex).is_zero());
  }
}

TEST(NormalForm, Examples) {
  Fixture<Q> r(Q{}, kXYT);
  const auto x = r.Ps("x");
  EXPECT_TRUE(normal_form<Q>(r.P("x^2"), x).is_zero());
  const auto g = r.Ps("x*y + t^2");
  EXPECT_EQ(normal_form<Q>(r.P("x*y + y"), g), r.P("y - t^2"));
  Fixture<Fp> p(Fp(5), kXYT);
  const auto gp = p.Ps("x*y + t^2");
  EXPECT_EQ(normal_form<Fp>(p.P("x*y + y"), gp), p.P("y + 4*t^2"));
}

TEST(NormalForm, Idempotent) {
  std::mt19937_64 rng(29);
  Fixture<Fp> r(Fp(7), kXYT);
  const auto gb = reduced_groebner<Fp>(r.Ps("x^2 - y*t, y^2 + x, t^3 - x*y"));
  for (int n = 0; n < 50; ++n) {
    const auto nf = normal_form<Fp>(r.P(random_poly_text(rng, kXYT, 0, 5, 4)), gb);
    EXPECT_EQ(normal_form<Fp>(nf, gb), nf);
  }
}

TEST(IdealOps, SumProductPower) {
  Fixture<Q> r(Q{}, kXYT);
  EXPECT_TRUE(ideal_equal(r.I("x") + r.I("y"), r.I("x, y")));
  EXPECT_TRUE(ideal_equal(power(r.I("x*y, x*t"), 2), r.I("x^2*y^2, x^2*y*t, x^2*t^2")));
  EXPECT_TRUE(ideal_equal(r.I("x") * r.I("y, t"), r.I("x*y, x*t")));
  EXPECT_TRUE(power(r.I("x"), 0).is_unit());
}

TEST(IdealOps, ColonInDimfailRing) {
  Fixture<Fp> r(Fp(3), kXYT, {"x*y", "x*t"});
  const auto c = colon(Ideal<Fp>::zero(r.pres), r.I("y"));
  EXPECT_TRUE(ideal_equal(c, r.I("x")));
  EXPECT_TRUE(ideal_equal(colon(Ideal<Fp>::zero(r.pres), r.I("x")), r.I("y, t")));
}

TEST(IdealOps, ColonOracle) {
  // (a : b) * b lies in a, and (a : b) contains a.
  std::mt19937_64 rng(31);
  Fixture<Fp> r(Fp(7), kXYT);
  for (int n = 0; n < 20; ++n) {
    const auto a = r.I(random_poly_text(rng, kXYT, 1, 3, 2) + ", " + random_poly_text(rng, kXYT, 2, 3, 2));
    const auto b = r.I(random_poly_text(rng, kXYT, 1, 2, 2));
    const auto c = colon(a, b);
    EXPECT_TRUE(a.contains(c * b));
    EXPECT_TRUE(c.contains(a));
  }
}

TEST(IdealOps, IntersectionOfMonomialIdeals) {
  Fixture<Q> r(Q{}, kXYT);
  EXPECT_TRUE(ideal_equal(intersection(r.I("x"), r.I("y")), r.I("x*y")));
  EXPECT_TRUE(ideal_equal(intersection(r.I("x^2, y"), r.I("x, y^3")), r.I("x^2, x*y, y^3")));
}

TEST(BracketPower, Examples) {
  Fixture<Fp> f2(Fp(2), {"x", "y"});
  EXPECT_TRUE(ideal_equal(bracket_power(f2.I("x, y"), 2), f2.I("x^2, y^2")));
  Fixture<Fp> f3(Fp(3), kXYT);
  EXPECT_TRUE(ideal_equal(bracket_power(f3.I("x*y + t^3"), 3), f3.I("x^3*y^3 + t^9")));
  EXPECT_THROW(bracket_power(f3.I("x"), 2), PreconditionError);
}

TEST(BracketPower, AdditiveOnRandomIdeals) {
  std::mt19937_64 rng(37);
  Fixture<Fp> r(Fp(3), kXYT);
  for (int n = 0; n < 15; ++n) {
    const auto i = r.I(random_poly_text(rng, kXYT, 1, 2, 2));
    const auto j = r.I(random_poly_text(rng, kXYT, 1, 2, 2));
    EXPECT_TRUE(ideal_equal(bracket_power(i + j, 3), bracket_power(i, 3) + bracket_power(j, 3)));
  }
}

TEST(KrullDimension, Examples) {
  Fixture<Fp> r(Fp(3), kXYT, {"x*y", "x*t"});
  EXPECT_EQ(krull_dimension(Ideal<Fp>::zero(r.pres)), 2);
  EXPECT_EQ(krull_dimension(r.I("y")), 1);
  EXPECT_EQ(krull_dimension(r.I("x")), 2);
  Fixture<Q> s(Q{}, kXYT);
  EXPECT_EQ(krull_dimension(Ideal<Q>::zero(s.pres)), 3);
  EXPECT_EQ(krull_dimension(Ideal<Q>::unit(s.pres)), -1);
  EXPECT_EQ(krull_dimension(s.I("x^2 - y^3")), 2);
}

TEST(Colength, Examples) {
  Fixture<Q> r(Q{}, {"x", "y"});
  EXPECT_EQ(colength(r.I("x^2, y^3")), ExtendedNat(6));
  EXPECT_TRUE(colength(r.I("x*y")).is_infinite());
  Fixture<Q> s(Q{}, kXYT);
  EXPECT_EQ(colength(s.I("x, y, t")), ExtendedNat(1));
}

TEST(Colength, CountsOnlyTheOrigin) {
  Fixture<Q> r(Q{}, {"x"});
  // V(x - x^2) = {0, 1}; only the point at the origin counts.
  EXPECT_EQ(colength(r.I("x - x^2")), ExtendedNat(1));
  EXPECT_EQ(colength(r.I("x^3 - x^4")), ExtendedNat(3));
  // A curve through the origin plus an isolated point elsewhere.
  Fixture<Q> s(Q{}, {"x", "y"});
  EXPECT_EQ(colength(s.I("x^2 - x^3, y^2")), ExtendedNat(4));
}

TEST(LocalEquality, AgreesUpToUnits) {
  Fixture<Q> r(Q{}, {"x", "y"});
  EXPECT_FALSE(ideal_equal(r.I("x - x^2, y"), r.I("x, y")));
  EXPECT_TRUE(locally_equal_at_origin(r.I("x - x^2, y"), r.I("x, y")));
  EXPECT_FALSE(locally_equal_at_origin(r.I("x^2, y"), r.I("x, y")));
  EXPECT_TRUE(locally_contains(r.I("x - x^2, y"), r.P("x")));
  EXPECT_FALSE(r.I("x - x^2, y").contains(r.P("x")));
}

TEST(IdealEqual, Examples) {
  Fixture<Q> r(Q{}, kXYT);
  EXPECT_TRUE(ideal_equal(r.I("x, y"), r.I("x + y, y")));
  EXPECT_FALSE(ideal_equal(r.I("x^2"), r.I("x")));
}

TEST(ModuleGroebner, FreeBasisIsItsOwnBasis) {
  Fixture<Q> r(Q{}, {"x", "y"});
  const auto ring = r.pres->ring();
  std::vector<FreeModuleVector<Q>> v = {FreeModuleVector<Q>({r.P("x"), r.P("0")}),
                                        FreeModuleVector<Q>({r.P("0"), r.P("x")})};
  const auto gb = module_groebner<Q>(v);
  ASSERT_EQ(gb.size(), 2u);
  EXPECT_TRUE(is_module_groebner_basis<Q>(gb));
  for (const auto& e : v) EXPECT_TRUE(module_normal_form<Q>(e, gb).is_zero());
}

TEST(ModuleGroebner, NormalFormIdempotent) {
  std::mt19937_64 rng(41);
  Fixture<Fp> r(Fp(7), kXYT);
  std::vector<FreeModuleVector<Fp>> v;
  for (int k = 0; k < 3; ++k) {
    v.emplace_back(std::vector<Polynomial<Fp>>{r.P(random_poly_text(rng, kXYT, 1, 2, 2)),
                                               r.P(random_poly_text(rng, kXYT, 1, 2, 2))});
  }
  const auto gb = module_groebner<Fp>(v);
  ASSERT_TRUE(is_module_groebner_basis<Fp>(gb));
  for (int n = 0; n < 30; ++n) {
    const FreeModuleVector<Fp> w({r.P(random_poly_text(rng, kXYT, 0, 3, 3)), r.P(random_poly_text(rng, kXYT, 0, 3, 3))});
    const auto nf = module_normal_form<Fp>(w, gb);
    EXPECT_EQ(module_normal_form<Fp>(nf, gb), nf);
  }
}

TEST(Syzygies, RegularSequenceHasOnlyKoszulRelation) {
  Fixture<Q> r(Q{}, {"x", "y"});
  const auto g = r.Ps("x, y");
  const auto syz = syzygies<Q>(g);
  ASSERT_FALSE(syz.empty());
  const FreeModuleVector<Q> koszul({r.P("y"), r.P("-x")});
  const auto gb = module_groebner<Q>(syz);
  EXPECT_TRUE(module_normal_form<Q>(koszul, gb).is_zero());
  for (const auto& s : syz) EXPECT_TRUE(module_normal_form<Q>(s, module_groebner<Q>(std::vector{koszul})).is_zero());
}

TEST(Syzygies, RepeatedGenerator) {
  Fixture<Q> r(Q{}, {"x", "y"});
  const auto g = r.Ps("x, x");
  const auto gb = module_groebner<Q>(syzygies<Q>(g));
  EXPECT_TRUE(module_normal_form<Q>(FreeModuleVector<Q>({r.P("1"), r.P("-1")}), gb).is_zero());
}

TEST(Syzygies, SingleNonzeroElementOverDomain) {
  Fixture<Q> r(Q{}, {"x", "y"});
  const auto g = r.Ps("x^2 - y^3");
  const auto syz = syzygies<Q>(g);
  EXPECT_TRUE(std::all_of(syz.begin(), syz.end(), [](const auto& s) { return s.is_zero(); }));
}

TEST(Syzygies, EveryGeneratorIsARelation) {
  std::mt19937_64 rng(43);
  Fixture<Fp> r(Fp(13), kXYT);
  for (int n = 0; n < 15; ++n) {
    std::vector<Polynomial<Fp>> g;
    for (int k = 0; k < 3; ++k) g.push_back(r.P(random_poly_text(rng, kXYT, 1, 2, 2)));
    for (const auto& s : syzygies<Fp>(g)) {
      Polynomial<Fp> sum(r.pres->ring());
      for (std::size_t k = 0; k < g.size(); ++k) sum += s[k] * g[k];
      EXPECT_TRUE(sum.is_zero());
    }
    // The Koszul relations are among the syzygies.
    const auto gb = module_groebner<Fp>(syzygies<Fp>(g));
    const FreeModuleVector<Fp> k01({g[1], -g[0], Polynomial<Fp>(r.pres->ring())});
    EXPECT_TRUE(module_normal_form<Fp>(k01, gb).is_zero());
  }
}

TEST(IdealCache, MatchesFreshComputation) {
  Fixture<Fp> r(Fp(5), kXYT);
  const auto i = r.I("x*y + t^2, x^3, y^3");
  const auto& cached = i.groebner_basis();
  const auto again = r.I("x*y + t^2, x^3, y^3").groebner_basis();
  EXPECT_EQ(cached, again);
  EXPECT_EQ(&i.groebner_basis(), &cached);
}
