#include "selftest.hpp"

#include <random>
#include <sstream>

#include "mperturb/errors.hpp"
#include "mperturb/groebner.hpp"
#include "mperturb/koszul.hpp"
#include "mperturb/multiplicity.hpp"
#include "mperturb/perturbation.hpp"
#include "mperturb/scan.hpp"
#include "mperturb/text_input.hpp"

namespace mperturb::cli {

namespace {

using Fp = PrimeField;

const std::vector<std::string> kVars = {"x", "y", "z"};

std::string random_term(std::mt19937_64& rng, unsigned min_deg, unsigned max_deg) {
  const unsigned deg = min_deg + static_cast<unsigned>(uniform_below(rng, max_deg - min_deg + 1));
  std::vector<unsigned> exps(kVars.size(), 0);
  for (unsigned d = 0; d < deg; ++d) ++exps[uniform_below(rng, kVars.size())];
  std::ostringstream s;
  s << (1 + uniform_below(rng, 5));
  for (std::size_t v = 0; v < kVars.size(); ++v) {
    if (exps[v] > 0) s << "*" << kVars[v] << "^" << exps[v];
  }
  return s.str();
}

std::string random_poly(std::mt19937_64& rng, unsigned min_deg, unsigned max_deg, unsigned terms) {
  std::string out;
  for (unsigned t = 0; t < terms; ++t) out += (t == 0 ? "" : (uniform_below(rng, 2) ? " + " : " - ")) + random_term(rng, min_deg, max_deg);
  return out;
}

RingSpec f7() { return RingSpec{7, kVars, {}}; }

template <class Body>
void guarded(SuiteResult& r, std::size_t instance, Body&& body) {
  try {
    body();
  } catch (const BudgetExceeded&) {
    // Budget exhaustion is a legitimate outcome, not a failure.
  } catch (const std::exception& e) {
    r.failures.push_back("instance " + std::to_string(instance) + ": " + e.what());
  }
}

SuiteResult confluence(const SelftestOptions& o) {
  SuiteResult r{"confluence", "groebner_engine/reduced_groebner", 0, {}};
  std::mt19937_64 rng(o.seed);
  const auto ring = PolyRing<Fp>::make(Fp(7), kVars);
  const GroebnerOptions options{200'000, o.drop_pairs};
  for (std::size_t n = 0; n < 60; ++n) {
    std::vector<Polynomial<Fp>> gens;
    const unsigned count = 2 + static_cast<unsigned>(uniform_below(rng, 2));
    for (unsigned g = 0; g < count; ++g) {
      gens.push_back(parse_polynomial<Fp>(random_poly(rng, 1, 3, 1 + uniform_below(rng, 3)), ring));
    }
    guarded(r, n, [&] {
      const auto gb = reduced_groebner<Fp>(gens, options);
      ++r.checked;
      if (!is_groebner_basis<Fp>(gb)) r.failures.push_back("instance " + std::to_string(n) + ": basis is not confluent");
      for (const auto& g : gens) {
        if (!normal_form<Fp>(g, gb).is_zero()) {
          r.failures.push_back("instance " + std::to_string(n) + ": a generator does not reduce to zero");
          break;
        }
      }
    });
  }
  return r;
}

SuiteResult box_oracle(const SelftestOptions& o) {
  SuiteResult r{"colength-box", "multiplicity/colength_box_oracle", 0, {}};
  std::mt19937_64 rng(o.seed + 1);
  const GroebnerOptions options{200'000, o.drop_pairs};
  const auto pres = make_presentation<Fp>(f7(), Fp(7), options);
  for (std::size_t n = 0; n < 40; ++n) {
    std::vector<unsigned> box;
    std::vector<std::string> texts;
    for (const auto& v : kVars) {
      box.push_back(2 + static_cast<unsigned>(uniform_below(rng, 3)));
      texts.push_back(v + "^" + std::to_string(box.back()));
    }
    texts.push_back(random_poly(rng, 1, 3, 2));
    texts.push_back(random_poly(rng, 2, 3, 2));
    guarded(r, n, [&] {
      const auto ideal = parse_ideal<Fp>(pres, texts);
      const auto via_gb = ideal.colength();
      const auto via_box = colength_box_oracle(ideal, box);
      ++r.checked;
      if (!via_gb.is_finite() || via_gb.value() != via_box) {
        r.failures.push_back("instance " + std::to_string(n) + ": Groebner count " +
                             (via_gb.is_finite() ? std::to_string(via_gb.value()) : "inf") + " vs box " +
                             std::to_string(via_box));
      }
    });
  }
  return r;
}

SuiteResult nak_equality(const SelftestOptions& o) {
  SuiteResult r{"nak-equality", "perturbation_lab/nak_equality_check", 0, {}};
  std::mt19937_64 rng(o.seed + 2);
  const auto pres = make_presentation<Fp>(f7(), Fp(7));
  const auto m = Ideal<Fp>::maximal(pres);
  for (std::size_t n = 0; n < 30; ++n) {
    const auto ideal = parse_ideal<Fp>(pres, {random_poly(rng, 1, 2, 2), random_poly(rng, 2, 3, 2)});
    PerturbationSpec<Fp> spec;
    spec.order = 2 + static_cast<unsigned>(uniform_below(rng, 2));
    spec.mode = RandomMode{o.seed + n, 1, 2};
    guarded(r, n, [&] {
      const auto eps = sample_perturbation<Fp>(spec, pres, ideal.generators().size()).front();
      const auto check = nak_equality_check(ideal, m, eps);
      ++r.checked;
      if (check.applicable && !check.equal) r.failures.push_back("instance " + std::to_string(n) + ": equality failed");
    });
  }
  return r;
}

SuiteResult koszul(const SelftestOptions& o) {
  SuiteResult r{"koszul", "koszul/koszul_h1", 0, {}};
  std::mt19937_64 rng(o.seed + 3);
  const auto pres = make_presentation<Fp>(RingSpec{7, kVars, {"x*y"}}, Fp(7));
  for (std::size_t n = 0; n < 20; ++n) {
    std::vector<Polynomial<Fp>> f;
    for (int g = 0; g < 2; ++g) {
      f.push_back(parse_polynomial<Fp>(random_poly(rng, 1, 2, 1 + uniform_below(rng, 2)), pres->ring()));
    }
    guarded(r, n, [&] {
      ++r.checked;
      if (!koszul_complex(pres, f).composition_vanishes()) {
        r.failures.push_back("instance " + std::to_string(n) + ": d1 * d2 != 0");
        return;
      }
      Subquotient<Fp> h;
      try {
        h = koszul_h1(pres, f);
      } catch (const PreconditionError&) {
        return;
      }
      const auto ann = h1_annihilator(h);
      if (!ann.contains(Ideal<Fp>(pres, f))) {
        r.failures.push_back("instance " + std::to_string(n) + ": I is not inside ann H1");
      }
    });
  }
  return r;
}

SuiteResult scan_determinism(const SelftestOptions&) {
  SuiteResult r{"scan-determinism", "perturbation_lab/stability_scan", 0, {}};
  auto config = catalog_entry("cusp-stable").config;
  guarded(r, 0, [&] {
    const std::string first = stability_scan(config).dump();
    config.jobs = 2;
    const std::string second = stability_scan(config).dump();
    ++r.checked;
    if (first != second) r.failures.push_back("reports differ between runs with the same seed");
  });
  return r;
}

SuiteResult catalog(const SelftestOptions&) {
  SuiteResult r{"catalog", "cli/catalog", 0, {}};
  std::size_t n = 0;
  for (const auto& entry : example_catalog()) {
    guarded(r, n++, [&] {
      ++r.checked;
      if (!stability_scan(entry.config).meets_expectations()) r.failures.push_back(entry.name + " misses expectations");
    });
  }
  return r;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestOptions& options) {
  return {confluence(options),       box_oracle(options), nak_equality(options), koszul(options),
          scan_determinism(options), catalog(options)};
}

nlohmann::ordered_json to_json(const std::vector<SuiteResult>& results, const SelftestOptions& options) {
  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed();
    suites.push_back({{"name", r.name},
                      {"provenance", r.provenance},
                      {"checked", r.checked},
                      {"passed", r.passed()},
                      {"failures", r.failures}});
  }
  return {{"seed", options.seed}, {"mutation", options.drop_pairs ? "drop-pairs" : "none"}, {"passed", all},
          {"suites", suites}};
}

}  // namespace mperturb::cli
