#include "mperturb/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "mperturb/errors.hpp"
#include "mperturb/koszul.hpp"
#include "mperturb/multiplicity.hpp"
#include "mperturb/perturbation.hpp"

namespace mperturb {

std::string to_string(InvariantKind kind) {
  switch (kind) {
    case InvariantKind::hs:
      return "hs";
    case InvariantKind::hk:
      return "hk";
    case InvariantKind::h1cond:
      return "h1cond";
    case InvariantKind::dim:
      return "dim";
  }
  return "hs";
}

InvariantKind parse_invariant(std::string_view text) {
  if (text == "hs") return InvariantKind::hs;
  if (text == "hk") return InvariantKind::hk;
  if (text == "h1" || text == "h1cond") return InvariantKind::h1cond;
  if (text == "dim") return InvariantKind::dim;
  throw PreconditionError("unknown invariant '" + std::string(text) + "' (expected hs, hk, h1cond or dim)");
}

mpq_class parse_rational(std::string_view text) {
  const std::string s(text);
  auto bad = [&] { return PreconditionError("'" + s + "' is not a rational number"); };
  if (s.empty()) throw bad();
  const auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }
  const std::string whole = s.substr(0, dot);
  const std::string frac = s.substr(dot + 1);
  const bool negative = !whole.empty() && whole.front() == '-';
  const std::string digits = (negative ? whole.substr(1) : whole) + frac;
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw bad();
  }
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  mpq_class q(negative ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

namespace {

std::string approx(const mpq_class& q) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << q.get_d();
  return out.str();
}

mpq_class abs_diff(const mpq_class& a, const mpq_class& b) {
  mpq_class d = a - b;
  return d < 0 ? mpq_class(-d) : d;
}

struct Evaluation {
  std::string value;
  Json values = Json::object();
  /// Numeric headline value for hs, hk and dim.
  std::optional<mpq_class> numeric;
  bool determined = true;
};

template <CoefficientField F>
Evaluation evaluate(InvariantKind kind, const Ideal<F>& i, const std::optional<Ideal<F>>& j, const Limits& limits) {
  Evaluation ev;
  switch (kind) {
    case InvariantKind::hs: {
      const auto est = hs_multiplicity(i, *j, limits.n_max);
      ev.value = est.value.get_str();
      ev.numeric = est.value;
      ev.determined = est.status == EstimateStatus::exact_stabilized;
      Json diffs = Json::array();
      for (const auto& d : est.evidence) diffs.push_back(d.get_str());
      ev.values["e"] = ev.value;
      ev.values["status"] = to_string(est.status);
      ev.values["dimension"] = est.sequence.dimension;
      ev.values["lengths"] = est.sequence.values;
      ev.values["differences"] = diffs;
      if (est.sequence.budget_exhausted) ev.values["budget_exhausted"] = *est.sequence.budget_exhausted;
      break;
    }
    case InvariantKind::hk: {
      const auto seq = hk_sequence(i, *j, limits.e_max);
      const auto est = hk_estimate(seq, seq.dimension);
      ev.value = est.value.get_str();
      ev.numeric = est.value;
      ev.determined = est.status != EstimateStatus::undetermined;
      Json ratios = Json::array();
      for (const auto& r : est.evidence) ratios.push_back(r.get_str());
      ev.values["e_hk"] = ev.value;
      ev.values["approx"] = approx(est.value);
      ev.values["status"] = to_string(est.status);
      ev.values["dimension"] = seq.dimension;
      ev.values["lengths"] = seq.values;
      ev.values["ratios"] = ratios;
      ev.values["filtration_bound"] = satisfies_filtration_bound(seq);
      if (seq.budget_exhausted) ev.values["budget_exhausted"] = *seq.budget_exhausted;
      break;
    }
    case InvariantKind::h1cond: {
      const auto c = h1_condition(i.presentation(), i.generators());
      ev.value = c.holds ? "true" : "false";
      ev.values["holds"] = c.holds;
      ev.values["dim_h1"] = c.dim_h1;
      ev.values["dim_quotient"] = c.dim_quotient;
      ev.values["trivially"] = c.trivially;
      break;
    }
    case InvariantKind::dim: {
      const int d = i.dimension();
      ev.value = std::to_string(d);
      ev.numeric = mpq_class(d);
      ev.values["dimension"] = d;
      break;
    }
  }
  return ev;
}

bool same_value(InvariantKind kind, const Evaluation& a, const Evaluation& b, const mpq_class& delta) {
  if (kind == InvariantKind::hk) return abs_diff(*a.numeric, *b.numeric) < delta;
  if (kind == InvariantKind::h1cond) return a.values == b.values;
  return *a.numeric == *b.numeric;
}

bool meets(InvariantKind kind, const Evaluation& ev, const std::string& expected, const mpq_class& delta) {
  if (kind == InvariantKind::h1cond) return ev.value == expected;
  const mpq_class target = parse_rational(expected);
  if (kind == InvariantKind::hk) return abs_diff(*ev.numeric, target) < delta;
  return ev.determined && *ev.numeric == target;
}

template <CoefficientField F>
std::vector<std::string> render(const std::vector<Polynomial<F>>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

struct Job {
  unsigned T;
  unsigned trial;
};

template <CoefficientField F>
class ScanRunner {
 public:
  ScanRunner(const ScanConfig& config, F field)
      : config_(config),
        delta_(parse_rational(config.limits.delta)),
        pres_(make_presentation<F>(config.ring, std::move(field), GroebnerOptions{config.limits.max_steps, false})),
        ideal_(parse_ideal<F>(pres_, config.ideal)) {
    if (delta_ <= 0) throw PreconditionError("the tolerance delta must be positive");
    if (config.orders.empty()) throw PreconditionError("a scan needs at least one order T");
    if (ideal_.generators().empty()) throw PreconditionError("a scan needs a nonzero ideal");
    const bool needs_j = config.invariant == InvariantKind::hs || config.invariant == InvariantKind::hk;
    if (needs_j) j_ = parse_ideal<F>(pres_, config.j);
    if (config.mode == ScanMode::root_adjunction && !needs_j) {
      throw PreconditionError("root-adjunction sweeps measure hs or hk");
    }
  }

  ScanReport run() {
    ScanReport report;
    report.meta = meta();
    const Evaluation base = evaluate(config_.invariant, ideal_, j_, config_.limits);
    report.base = base_json(base);

    const auto jobs = plan();
    std::vector<ScanRow> rows(jobs.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(config_.jobs, static_cast<unsigned>(jobs.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k = next++; k < jobs.size(); k = next++) rows[k] = run_row(jobs[k], base);
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    report.rows = std::move(rows);
    set_threshold(report);
    return report;
  }

 private:
  std::vector<Job> plan() const {
    std::vector<unsigned> orders = config_.orders;
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    std::vector<Job> jobs;
    for (unsigned T : orders) {
      const bool single = config_.mode == ScanMode::root_adjunction || config_.fixed_eps.count(T) > 0;
      const unsigned trials = single ? 1 : config_.trials;
      for (unsigned trial = 0; trial < trials; ++trial) jobs.push_back({T, trial});
    }
    return jobs;
  }

  ScanRow run_row(const Job& job, const Evaluation& base) const {
    ScanRow row;
    row.T = job.T;
    row.trial = job.trial;
    if (auto it = config_.expected.find(job.T); it != config_.expected.end()) row.expected = it->second;
    try {
      const Evaluation ev = config_.mode == ScanMode::root_adjunction ? root_row(job, row) : perturb_row(job, row);
      row.value = ev.value;
      row.values = ev.values;
      if (!ev.determined) {
        row.verdict = "undetermined";
      } else {
        row.verdict = same_value(config_.invariant, ev, base, delta_) ? "match" : "differs";
      }
      if (row.expected) row.matches_expected = meets(config_.invariant, ev, *row.expected, delta_);
    } catch (const BudgetExceeded& e) {
      row.verdict = "error";
      row.error = std::string("budget exceeded: ") + e.what();
    } catch (const PreconditionError& e) {
      row.verdict = "error";
      row.error = e.what();
    }
    if (row.error && row.expected) row.matches_expected = false;
    return row;
  }

  Evaluation perturb_row(const Job& job, ScanRow& row) const {
    // Fresh handles: caches are not shared between worker threads.
    const Ideal<F> ideal(pres_, ideal_.generators());
    std::optional<Ideal<F>> j;
    if (j_) j.emplace(pres_, j_->generators());
    PerturbationSpec<F> spec;
    spec.order = job.T;
    spec.monomial_cap = config_.limits.monomial_cap;
    if (auto it = config_.fixed_eps.find(job.T); it != config_.fixed_eps.end()) {
      std::vector<Polynomial<F>> eps;
      for (const auto& text : it->second) eps.push_back(parse_polynomial<F>(text, pres_->ring()));
      spec.mode = std::move(eps);
    } else {
      spec.mode = RandomMode{config_.seed, config_.degree_window, config_.terms_per_eps};
      spec.trials = job.trial + 1;
    }
    auto all = sample_perturbation(spec, pres_, ideal.generators().size());
    const auto& eps = all.back();
    row.perturbation = render(eps);
    const auto moved = perturbed(ideal, eps);
    row.generators = render(moved.generators());
    Evaluation ev = evaluate(config_.invariant, moved, j, config_.limits);
    if (j) {
      const auto nak = nak_equality_check(ideal, *j, eps);
      ev.values["nak"] = Json{{"applicable", nak.applicable}, {"equal", nak.equal}};
    }
    return ev;
  }

  Evaluation root_row(const Job& job, ScanRow& row) const {
    const std::vector<unsigned> exponents(ideal_.generators().size(), job.T);
    const auto adj = adjoin_roots<F>(pres_, ideal_.generators(), exponents);
    for (std::size_t k = 0; k < adj.root_names.size(); ++k) {
      row.perturbation.push_back(adj.root_names[k] + "^" + std::to_string(job.T) + " = " +
                                 ideal_.generators()[k].to_string());
    }
    row.generators = render(adj.presentation->defining_ideal());
    std::optional<Ideal<F>> j;
    j.emplace(j_->moved_to(adj.presentation));
    if (config_.j.size() == 1 && config_.j.front() == "maximal") j.emplace(Ideal<F>::maximal(adj.presentation));
    return evaluate(config_.invariant, Ideal<F>::zero(adj.presentation), j, config_.limits);
  }

  Json meta() const {
    Json m;
    m["version"] = kVersion;
    m["seed"] = config_.seed;
    m["invariant"] = to_string(config_.invariant);
    m["mode"] = config_.mode == ScanMode::perturbation ? "perturbation" : "root_adjunction";
    m["ring"] = Json{{"characteristic", config_.ring.characteristic},
                     {"variables", config_.ring.variables},
                     {"defining_ideal", render(pres_->defining_ideal())}};
    m["ideal"] = render(ideal_.generators());
    if (j_) m["J"] = render(j_->generators());
    m["limits"] = Json{{"max_steps", config_.limits.max_steps},
                       {"monomial_cap", config_.limits.monomial_cap},
                       {"n_max", config_.limits.n_max},
                       {"e_max", config_.limits.e_max},
                       {"delta", delta_.get_str()}};
    Json grid;
    std::vector<unsigned> orders = config_.orders;
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    grid["orders"] = orders;
    if (config_.mode == ScanMode::perturbation) {
      grid["trials"] = config_.trials;
      grid["sampling"] = config_.fixed_eps.empty() ? "random" : "fixed";
      if (config_.fixed_eps.size() < orders.size()) {
        grid["degree_window"] = config_.degree_window;
        grid["terms_per_eps"] = config_.terms_per_eps;
      }
    }
    m["grid"] = grid;
    m["hypotheses"] = config_.hypotheses;
    if (!config_.expected_source.empty()) m["expected_source"] = config_.expected_source;
    Json notes = Json::array();
    notes.push_back("empirical scan: agreement on the sampled perturbations does not certify a stabilization order");
    if (config_.mode == ScanMode::perturbation) {
      notes.push_back("perturbs the fixed generator list in meta.ideal, not every minimal generating set");
    } else {
      notes.push_back("T is the root exponent n; the base value is the invariant of R/(f)");
    }
    if (config_.invariant == InvariantKind::hk) {
      notes.push_back("e_hk values are estimates from finitely many Frobenius powers; raw lengths are included");
    }
    m["notes"] = notes;
    return m;
  }

  Json base_json(const Evaluation& base) const {
    Json b;
    b["value"] = base.value;
    b["values"] = base.values;
    b["dimension"] = ideal_.dimension();
    if (config_.invariant != InvariantKind::h1cond && config_.mode == ScanMode::perturbation) {
      try {
        const auto c = h1_condition(pres_, ideal_.generators());
        b["h1_condition"] = Json{{"holds", c.holds},
                                 {"dim_h1", c.dim_h1},
                                 {"dim_quotient", c.dim_quotient},
                                 {"trivially", c.trivially}};
      } catch (const PreconditionError& e) {
        b["h1_condition"] = Json{{"unavailable", e.what()}};
      }
    }
    if (config_.expected_base) {
      b["expected"] = *config_.expected_base;
      b["matches_expected"] = meets(config_.invariant, base, *config_.expected_base, delta_);
    }
    return b;
  }

  void set_threshold(ScanReport& report) const {
    if (config_.mode == ScanMode::root_adjunction) {
      report.threshold_note = "not applicable to root-adjunction sweeps";
      return;
    }
    std::map<unsigned, bool> all_match;
    for (const auto& row : report.rows) {
      auto [it, inserted] = all_match.emplace(row.T, true);
      it->second = it->second && row.verdict == "match";
    }
    std::optional<unsigned> threshold;
    for (auto it = all_match.rbegin(); it != all_match.rend() && it->second; ++it) threshold = it->first;
    report.threshold = threshold;
    report.threshold_note = threshold ? "empirical, not certified: every trial matched from this order on"
                                      : "none in range";
  }

  const ScanConfig& config_;
  mpq_class delta_;
  typename RingPresentation<F>::Ptr pres_;
  Ideal<F> ideal_;
  std::optional<Ideal<F>> j_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

ScanReport stability_scan(const ScanConfig& config) {
  return with_field(config.ring.characteristic, [&](auto field) {
    return ScanRunner<decltype(field)>(config, field).run();
  });
}

Json ScanReport::to_json() const {
  Json out;
  out["meta"] = meta;
  out["base"] = base;
  Json rs = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["T"] = r.T;
    row["trial"] = r.trial;
    row["perturbation"] = r.perturbation;
    row["generators"] = r.generators;
    row["value"] = r.value;
    row["values"] = r.values;
    row["verdict"] = r.verdict;
    if (r.expected) row["expected"] = *r.expected;
    if (r.matches_expected) row["matches_expected"] = *r.matches_expected;
    if (r.error) row["error"] = *r.error;
    rs.push_back(std::move(row));
  }
  out["rows"] = std::move(rs);
  out["threshold"] = Json{{"T", threshold ? Json(*threshold) : Json(nullptr)}, {"note", threshold_note}};
  return out;
}

ScanReport ScanReport::from_json(const Json& j) {
  ScanReport r;
  r.meta = j.at("meta");
  r.base = j.at("base");
  for (const auto& row : j.at("rows")) {
    ScanRow s;
    s.T = row.at("T").get<unsigned>();
    s.trial = row.at("trial").get<unsigned>();
    s.perturbation = row.at("perturbation").get<std::vector<std::string>>();
    s.generators = row.at("generators").get<std::vector<std::string>>();
    s.value = row.at("value").get<std::string>();
    s.values = row.at("values");
    s.verdict = row.at("verdict").get<std::string>();
    if (row.contains("expected")) s.expected = row.at("expected").get<std::string>();
    if (row.contains("matches_expected")) s.matches_expected = row.at("matches_expected").get<bool>();
    if (row.contains("error")) s.error = row.at("error").get<std::string>();
    r.rows.push_back(std::move(s));
  }
  const auto& t = j.at("threshold");
  if (!t.at("T").is_null()) r.threshold = t.at("T").get<unsigned>();
  r.threshold_note = t.at("note").get<std::string>();
  return r;
}

std::string ScanReport::dump() const { return to_json().dump(2) + "\n"; }

std::string ScanReport::to_csv() const {
  std::string out = "T,trial,perturbation,value,verdict,expected,matches_expected,error\r\n";
  for (const auto& r : rows) {
    const std::vector<std::string> fields = {
        std::to_string(r.T),
        std::to_string(r.trial),
        join(r.perturbation, "; "),
        r.value,
        r.verdict,
        r.expected.value_or(""),
        r.matches_expected ? (*r.matches_expected ? "true" : "false") : "",
        r.error.value_or(""),
    };
    std::vector<std::string> quoted;
    for (const auto& f : fields) quoted.push_back(csv_field(f));
    out += join(quoted, ",") + "\r\n";
  }
  return out;
}

bool ScanReport::meets_expectations() const {
  if (base.contains("matches_expected") && !base.at("matches_expected").get<bool>()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const ScanRow& r) { return r.matches_expected.value_or(true); });
}

}  // namespace mperturb
