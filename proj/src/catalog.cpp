#include <algorithm>

#include "mperturb/errors.hpp"
#include "mperturb/scan.hpp"

namespace mperturb {

namespace {

RingSpec f3_xyt(std::vector<std::string> k = {}) { return RingSpec{3, {"x", "y", "t"}, std::move(k)}; }

CatalogEntry notiso() {
  ScanConfig c;
  c.ring = f3_xyt();
  c.ideal = {"x*y"};
  c.invariant = InvariantKind::hk;
  c.orders = {2, 3, 4, 5};
  for (unsigned n : c.orders) {
    c.fixed_eps[n] = {"t^" + std::to_string(n)};
    c.expected[n] = std::to_string(2 * n - 1) + "/" + std::to_string(n);
  }
  c.limits.e_max = 4;
  c.expected_base = "2";
  c.expected_source = "closed form e_HK(R/(xy + t^n)) = 2 - 1/n; e_HK(R/(xy)) = 2";
  c.hypotheses = {"R/(xy) is equidimensional and generically reduced (checked by hand)"};
  return {"notiso", "xy + t^n over F_3: Hilbert-Kunz multiplicity drops to 2 - 1/n for every n", c};
}

CatalogEntry dimfail1_y() {
  ScanConfig c;
  c.ring = f3_xyt({"x*y", "x*t"});
  c.ideal = {"y"};
  c.invariant = InvariantKind::hs;
  c.orders = {2, 3, 4};
  for (unsigned n : c.orders) {
    c.fixed_eps[n] = {"x^" + std::to_string(n)};
    c.expected[n] = "1";
  }
  c.expected_base = "2";
  c.expected_source =
      "R = k[x,y,t]/(xy, xt) has minimal primes (x) and (y, t); e(m, R/(y)) = 2, e(m, R/(y + x^n)) = 1; "
      "ann H1(y; R) = (y, t) so the H1 condition fails";
  c.hypotheses = {"H1 condition fails for I = (y): dim R/ann H1 = 1 = dim R/(y)"};
  return {"dimfail1-y", "(y) + x^n in k[x,y,t]/(xy, xt): multiplicity drops from 2 to 1", c};
}

CatalogEntry dimfail1_x() {
  ScanConfig c;
  c.ring = f3_xyt({"x*y", "x*t"});
  c.ideal = {"x"};
  c.invariant = InvariantKind::hs;
  c.orders = {1, 2, 3, 4};
  for (unsigned n : c.orders) {
    c.fixed_eps[n] = {"t^" + std::to_string(n)};
    c.expected[n] = std::to_string(n);
  }
  c.expected_base = "1";
  c.expected_source =
      "R/(x + t^n) = k[y,t]/(t^(n+1), t^n y) has multiplicity n; R/(x) = k[y,t] has multiplicity 1";
  c.hypotheses = {"H1 condition fails for I = (x): ann H1(x; R) = (x)", "dim R/(x + t^n) = 1 < 2 = dim R/(x)"};
  return {"dimfail1-x", "(x) + t^n in k[x,y,t]/(xy, xt): multiplicity jumps to n", c};
}

CatalogEntry hklimit_xy() {
  ScanConfig c;
  c.ring = RingSpec{3, {"x", "y"}, {}};
  c.ideal = {"x*y"};
  c.invariant = InvariantKind::hk;
  c.mode = ScanMode::root_adjunction;
  c.orders = {2, 3, 4};
  for (unsigned n : c.orders) c.expected[n] = std::to_string(2 * n - 1) + "/" + std::to_string(n);
  c.limits.e_max = 4;
  c.expected_base = "2";
  c.expected_source = "F_3[x,y][u]/(u^n - xy) has e_HK = 2 - 1/n, tending to e_HK(F_3[x,y]/(xy)) = 2";
  c.hypotheses = {"F_3[x,y]/(xy) is equidimensional and generically reduced (checked by hand)"};
  return {"hklimit-xy", "root adjunction u^n = xy over F_3[x,y]: e_HK approaches 2 from below", c};
}

CatalogEntry cusp_stable() {
  ScanConfig c;
  c.ring = RingSpec{0, {"x", "y", "t"}, {}};
  c.ideal = {"x^2 - y^3"};
  c.invariant = InvariantKind::hs;
  c.orders = {3, 4, 5, 6};
  c.trials = 5;
  c.degree_window = 2;
  c.terms_per_eps = 3;
  c.seed = 20240611;
  for (unsigned n : c.orders) c.expected[n] = "2";
  c.expected_base = "2";
  c.expected_source = "a hypersurface has multiplicity equal to the order of its equation, here 2";
  c.hypotheses = {"x^2 - y^3 is a nonzerodivisor, so H1 vanishes and the H1 condition holds"};
  return {"cusp-stable", "x^2 - y^3 in Q[x,y,t] under random perturbations: multiplicity stays 2", c};
}

}  // namespace

std::vector<CatalogEntry> example_catalog() {
  return {notiso(), dimfail1_y(), dimfail1_x(), hklimit_xy(), cusp_stable()};
}

const CatalogEntry& catalog_entry(std::string_view name) {
  static const std::vector<CatalogEntry> catalog = example_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto& e) { return e.name == name; });
  if (it == catalog.end()) {
    std::string known;
    for (const auto& e : catalog) known += (known.empty() ? "" : ", ") + e.name;
    throw PreconditionError("unknown catalog entry '" + std::string(name) + "' (known: " + known + ")");
  }
  return *it;
}

}  // namespace mperturb
