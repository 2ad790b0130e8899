#include <gtest/gtest.h>

#include "mperturb/errors.hpp"
#include "mperturb/koszul.hpp"
#include "support.hpp"

using namespace mperturb;
using namespace mperturb::testing;

namespace {

const std::vector<std::string> kXYT = {"x", "y", "t"};

Fixture<Fp> dimfail() { return Fixture<Fp>(Fp(3), kXYT, {"x*y", "x*t"}); }

}  // namespace

TEST(KoszulComplex, ColumnsAreKoszulRelations) {
  Fixture<Q> r(Q{}, kXYT);
  const auto f = r.Ps("x, y^2, x*t + y");
  const auto k = koszul_complex(r.pres, f);
  ASSERT_EQ(k.d2.size(), 3u);
  // Pair order (0,1), (0,2), (1,2): column for (i,j) is f_j e_i - f_i e_j.
  EXPECT_EQ(k.d2[0][0], f[1]);
  EXPECT_EQ(k.d2[0][1], -f[0]);
  EXPECT_TRUE(k.d2[0][2].is_zero());
  EXPECT_EQ(k.d2[2][1], f[2]);
  EXPECT_EQ(k.d2[2][2], -f[1]);
  EXPECT_TRUE(k.composition_vanishes());
}

TEST(KoszulComplex, CompositionVanishesOnRandomInputs) {
  std::mt19937_64 rng(51);
  auto r = dimfail();
  for (int n = 0; n < 60; ++n) {
    std::vector<Polynomial<Fp>> f;
    for (int k = 0; k < 1 + n % 4; ++k) f.push_back(r.P(random_poly_text(rng, kXYT, 1, 3, 2)));
    EXPECT_TRUE(koszul_complex(r.pres, f).composition_vanishes());
  }
}

TEST(KoszulH1, RegularSequenceIsAcyclic) {
  Fixture<Q> r(Q{}, kXYT);
  const auto h = koszul_h1(r.pres, r.Ps("x, y"));
  EXPECT_TRUE(h.is_zero());
  EXPECT_TRUE(h.minimality_verified_at_origin);
  EXPECT_TRUE(h1_annihilator(h).is_unit());
}

TEST(KoszulH1, NonzerodivisorIsAcyclic) {
  Fixture<Q> r(Q{}, kXYT);
  EXPECT_TRUE(koszul_h1(r.pres, r.Ps("x*y")).is_zero());
}

TEST(KoszulH1, ZeroDivisorInDimfailRing) {
  auto r = dimfail();
  const auto h = koszul_h1(r.pres, r.Ps("y"));
  EXPECT_FALSE(h.is_zero());
  EXPECT_EQ(h.rank, 1u);
  // H1 = (0 : y) = (x): the single cycle generator is x up to boundaries.
  Ideal<Fp> cycles(r.pres, {h.cycles.front()[0]});
  EXPECT_TRUE(ideal_equal(cycles + r.I("x*y, x*t"), r.I("x")));
}

TEST(H1Annihilator, DimfailExamples) {
  auto r = dimfail();
  EXPECT_TRUE(ideal_equal(h1_annihilator(koszul_h1(r.pres, r.Ps("y"))), r.I("y, t")));
  EXPECT_TRUE(ideal_equal(h1_annihilator(koszul_h1(r.pres, r.Ps("x"))), r.I("x")));
}

TEST(H1Annihilator, ContainsTheIdeal) {
  std::mt19937_64 rng(53);
  auto r = dimfail();
  int checked = 0;
  for (int n = 0; n < 60; ++n) {
    std::vector<Polynomial<Fp>> f;
    for (int k = 0; k < 2; ++k) f.push_back(r.P(random_poly_text(rng, kXYT, 1, 2, 1 + n % 2)));
    try {
      const auto ann = h1_annihilator(koszul_h1(r.pres, f));
      EXPECT_TRUE(ann.contains(Ideal<Fp>(r.pres, f)));
      ++checked;
    } catch (const PreconditionError&) {
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(KoszulH1, IndependentOfMinimalGeneratingSet) {
  auto r = dimfail();
  // (y, t) and (y + t + x*y, y - t) generate the same ideal of R minimally.
  const auto a = h1_condition(r.pres, r.Ps("y, t"));
  const auto b = h1_condition(r.pres, r.Ps("y + t + x*y, y - t"));
  EXPECT_EQ(a.dim_h1, b.dim_h1);
  EXPECT_EQ(a.dim_quotient, b.dim_quotient);
  EXPECT_EQ(a.holds, b.holds);
  EXPECT_TRUE(ideal_equal(h1_annihilator(koszul_h1(r.pres, r.Ps("y, t"))),
                          h1_annihilator(koszul_h1(r.pres, r.Ps("y + t + x*y, y - t")))));
}

TEST(KoszulH1, RejectsVisiblyNonMinimalGenerators) {
  Fixture<Q> r(Q{}, kXYT);
  EXPECT_THROW(koszul_h1(r.pres, r.Ps("x, x*y")), PreconditionError);
  EXPECT_THROW(koszul_h1(r.pres, r.Ps("1 + x")), PreconditionError);
  EXPECT_THROW(koszul_h1(r.pres, r.Ps("x, x")), PreconditionError);
}

TEST(H1Condition, DimfailY) {
  auto r = dimfail();
  const auto c = h1_condition(r.pres, r.Ps("y"));
  EXPECT_EQ(c.dim_h1, 1);
  EXPECT_EQ(c.dim_quotient, 1);
  EXPECT_FALSE(c.holds);
}

TEST(H1Condition, DimfailX) {
  auto r = dimfail();
  const auto c = h1_condition(r.pres, r.Ps("x"));
  EXPECT_EQ(c.dim_h1, 2);
  EXPECT_EQ(c.dim_quotient, 2);
  EXPECT_FALSE(c.holds);
}

TEST(H1Condition, HypersurfaceHolds) {
  Fixture<Q> r(Q{}, kXYT);
  const auto c = h1_condition(r.pres, r.Ps("x*y"));
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.dim_h1, -1);
  EXPECT_EQ(c.dim_quotient, 2);
}

TEST(H1Condition, ZeroDimensionalQuotientIsVacuous) {
  Fixture<Q> r(Q{}, {"x", "y"});
  const auto c = h1_condition(r.pres, r.Ps("x, y"));
  EXPECT_TRUE(c.trivially);
  EXPECT_EQ(c.dim_quotient, 0);
}
