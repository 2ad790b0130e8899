#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "mperturb/errors.hpp"
#include "mperturb/groebner.hpp"
#include "mperturb/koszul.hpp"
#include "mperturb/multiplicity.hpp"
#include "mperturb/scan.hpp"
#include "selftest.hpp"

namespace mperturb::cli {

namespace {

/// Everything a command needs, whether it came from flags or a task file.
struct Request {
  std::string kind;
  RingSpec ring;
  bool ring_given = false;
  std::vector<std::string> ideal;
  std::vector<std::string> j = {"maximal"};
  Limits limits;
  std::uint64_t seed = 0;
  std::vector<unsigned> box;
  // scan
  InvariantKind invariant = InvariantKind::hs;
  ScanMode mode = ScanMode::perturbation;
  std::vector<unsigned> orders;
  unsigned trials = 1;
  unsigned degree_window = 2;
  unsigned terms_per_eps = 3;
  std::map<unsigned, std::vector<std::string>> fixed_eps;
  unsigned jobs = 1;
  // catalog
  std::string catalog_run;
  // selftest
  bool drop_pairs = false;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

unsigned to_unsigned(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw PreconditionError(what + " must be a natural number, got '" + s + "'");
  }
  return static_cast<unsigned>(std::stoul(t));
}

/// "p=3;vars=x,y,t;K=x*y,x*t"
RingSpec parse_inline_ring(const std::string& text) {
  RingSpec spec;
  bool have_vars = false;
  for (const auto& part : split(text, ';')) {
    const std::string item = trim(part);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("ring item '" + item + "' is not of the form key=value");
    const std::string key = trim(item.substr(0, eq));
    const std::string value = trim(item.substr(eq + 1));
    if (key == "p" || key == "char" || key == "characteristic") {
      spec.characteristic = to_unsigned(value, "the characteristic");
    } else if (key == "vars" || key == "variables") {
      for (const auto& v : split(value, ',')) spec.variables.push_back(trim(v));
      have_vars = true;
    } else if (key == "K") {
      if (!value.empty()) spec.defining_ideal.push_back(value);
    } else {
      throw PreconditionError("unknown ring key '" + key + "' (expected p, vars, K)");
    }
  }
  if (!have_vars) throw PreconditionError("the ring needs vars=...");
  return spec;
}

std::vector<std::string> infer_variables(const std::vector<std::vector<std::string>>& texts) {
  std::vector<std::string> vars;
  for (const auto& list : texts) {
    for (const auto& text : list) {
      if (text == "maximal") continue;
      for (std::size_t i = 0; i < text.size();) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isalpha(c) || c == '_') {
          std::size_t j = i;
          while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
          std::string name = text.substr(i, j - i);
          if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(std::move(name));
          i = j;
        } else {
          ++i;
        }
      }
    }
  }
  if (vars.empty()) throw PreconditionError("cannot infer variables: pass --ring \"p=...;vars=...\"");
  return vars;
}

// ---------------------------------------------------------------------------
// Task files

void reject_unknown(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw PreconditionError(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw PreconditionError("unknown key '" + key + "' in " + where);
  }
}

std::vector<std::string> string_list(const Json& v, const std::string& what) {
  if (v.is_string()) return {v.get<std::string>()};
  if (!v.is_array()) throw PreconditionError(what + " must be a string or a list of strings");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) throw PreconditionError(what + " must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

template <class T>
T get_number(const Json& v, const std::string& what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw PreconditionError(what + " must be a natural number");
  }
  return v.get<T>();
}

void load_task_file(const std::string& path, Request& req) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open task file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw PreconditionError("task file '" + path + "' is not valid JSON: " + e.what());
  }
  reject_unknown(doc, {"ring", "task", "limits", "seed"}, "the task file");
  if (!doc.contains("task")) throw PreconditionError("the task file needs a 'task' section");

  if (doc.contains("ring")) {
    const auto& r = doc.at("ring");
    reject_unknown(r, {"characteristic", "variables", "defining_ideal"}, "ring");
    if (!r.contains("variables")) throw PreconditionError("ring.variables is required");
    req.ring.characteristic = r.contains("characteristic") ? get_number<std::uint32_t>(r.at("characteristic"),
                                                                                          "ring.characteristic")
                                                           : 0;
    req.ring.variables = string_list(r.at("variables"), "ring.variables");
    if (r.contains("defining_ideal")) req.ring.defining_ideal = string_list(r.at("defining_ideal"), "ring.defining_ideal");
    req.ring_given = true;
  }
  if (doc.contains("limits")) {
    const auto& l = doc.at("limits");
    reject_unknown(l, {"max_steps", "monomial_cap", "n_max", "e_max", "delta"}, "limits");
    if (l.contains("max_steps")) req.limits.max_steps = get_number<std::uint64_t>(l.at("max_steps"), "limits.max_steps");
    if (l.contains("monomial_cap")) {
      req.limits.monomial_cap = get_number<std::uint64_t>(l.at("monomial_cap"), "limits.monomial_cap");
    }
    if (l.contains("n_max")) req.limits.n_max = get_number<unsigned>(l.at("n_max"), "limits.n_max");
    if (l.contains("e_max")) req.limits.e_max = get_number<unsigned>(l.at("e_max"), "limits.e_max");
    if (l.contains("delta")) {
      const auto& d = l.at("delta");
      if (d.is_string()) {
        req.limits.delta = d.get<std::string>();
      } else if (d.is_number()) {
        req.limits.delta = d.dump();
      } else {
        throw PreconditionError("limits.delta must be a number or a rational string");
      }
      parse_rational(req.limits.delta);
    }
  }
  if (doc.contains("seed")) req.seed = get_number<std::uint64_t>(doc.at("seed"), "seed");

  const auto& t = doc.at("task");
  if (!t.is_object() || !t.contains("kind") || !t.at("kind").is_string()) {
    throw PreconditionError("task.kind must be one of gb, dim, colength, h1, hs, hk, scan, catalog");
  }
  req.kind = t.at("kind").get<std::string>();
  static const std::map<std::string, std::set<std::string>> allowed = {
      {"gb", {"kind", "ideal"}},
      {"dim", {"kind", "ideal"}},
      {"colength", {"kind", "ideal", "box"}},
      {"h1", {"kind", "ideal"}},
      {"hs", {"kind", "ideal", "J"}},
      {"hk", {"kind", "ideal", "J"}},
      {"scan",
       {"kind", "ideal", "J", "invariant", "mode", "orders", "trials", "epsilons", "degree_window", "terms_per_eps",
        "jobs"}},
      {"catalog", {"kind", "name"}},
  };
  const auto it = allowed.find(req.kind);
  if (it == allowed.end()) throw PreconditionError("unknown task kind '" + req.kind + "'");
  reject_unknown(t, it->second, "task");
  if (t.contains("ideal")) req.ideal = string_list(t.at("ideal"), "task.ideal");
  if (t.contains("J")) req.j = string_list(t.at("J"), "task.J");
  if (t.contains("box")) {
    for (const auto& b : t.at("box")) req.box.push_back(get_number<unsigned>(b, "task.box"));
  }
  if (t.contains("invariant")) req.invariant = parse_invariant(t.at("invariant").get<std::string>());
  if (t.contains("mode")) {
    const auto mode = t.at("mode").get<std::string>();
    if (mode == "perturbation") {
      req.mode = ScanMode::perturbation;
    } else if (mode == "root_adjunction") {
      req.mode = ScanMode::root_adjunction;
    } else {
      throw PreconditionError("task.mode must be perturbation or root_adjunction");
    }
  }
  if (t.contains("orders")) {
    for (const auto& o : t.at("orders")) req.orders.push_back(get_number<unsigned>(o, "task.orders"));
  }
  if (t.contains("trials")) req.trials = get_number<unsigned>(t.at("trials"), "task.trials");
  if (t.contains("degree_window")) req.degree_window = get_number<unsigned>(t.at("degree_window"), "task.degree_window");
  if (t.contains("terms_per_eps")) req.terms_per_eps = get_number<unsigned>(t.at("terms_per_eps"), "task.terms_per_eps");
  if (t.contains("jobs")) req.jobs = get_number<unsigned>(t.at("jobs"), "task.jobs");
  if (t.contains("epsilons")) {
    const auto& eps = t.at("epsilons");
    if (!eps.is_object()) throw PreconditionError("task.epsilons must map orders to lists of polynomials");
    for (const auto& [order, list] : eps.items()) {
      auto& eps_list = req.fixed_eps[to_unsigned(order, "an epsilons key")];
      for (const auto& text : string_list(list, "task.epsilons")) {
        for (const auto& e : split(text, ',')) eps_list.push_back(trim(e));
      }
    }
  }
  if (t.contains("name")) req.catalog_run = t.at("name").get<std::string>();
}

// ---------------------------------------------------------------------------
// Commands

Json ring_json(const RingSpec& spec) {
  return Json{{"characteristic", spec.characteristic},
              {"variables", spec.variables},
              {"defining_ideal", spec.defining_ideal}};
}

template <CoefficientField F>
std::vector<std::string> render(const std::vector<Polynomial<F>>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

struct Outcome {
  Json result;
  int code = kOk;
};

template <CoefficientField F>
Outcome run_algebra(const Request& req, F field) {
  const GroebnerOptions options{req.limits.max_steps, req.drop_pairs};
  const auto pres = make_presentation<F>(req.ring, std::move(field), options);
  if (req.ideal.empty()) throw PreconditionError("--ideal is required for '" + req.kind + "'");
  const auto ideal = parse_ideal<F>(pres, req.ideal);
  Outcome o;
  Json& r = o.result;
  r["command"] = req.kind;
  r["ring"] = ring_json(req.ring);
  r["ideal"] = render(ideal.generators());

  if (req.kind == "gb") {
    const auto& gb = ideal.groebner_basis();
    r["groebner_basis"] = render(gb);
    r["confluent"] = is_groebner_basis<F>(gb);
  } else if (req.kind == "dim") {
    r["dimension"] = ideal.dimension();
  } else if (req.kind == "colength") {
    const auto len = ideal.colength();
    r["colength"] = len.is_finite() ? Json(len.value()) : Json("inf");
    if (!req.box.empty()) r["box_oracle"] = colength_box_oracle(ideal, req.box, req.limits.monomial_cap);
  } else if (req.kind == "h1") {
    const auto h = koszul_h1(pres, ideal.generators());
    std::vector<std::string> cycles, boundaries;
    for (const auto& z : h.cycles) cycles.push_back(z.to_string());
    for (const auto& b : h.boundaries) boundaries.push_back(b.to_string());
    const auto ann = h1_annihilator(h);
    const auto c = h1_condition(pres, ideal.generators());
    r["minimality"] = h.minimality_verified_at_origin ? "verified at origin" : "unchecked";
    r["cycles"] = cycles;
    r["boundaries"] = boundaries;
    r["h1_is_zero"] = h.is_zero();
    r["annihilator"] = render(ann.groebner_basis());
    r["dim_h1"] = c.dim_h1;
    r["dim_quotient"] = c.dim_quotient;
    r["holds"] = c.holds;
    r["trivially"] = c.trivially;
  } else if (req.kind == "hs" || req.kind == "hk") {
    const auto j = parse_ideal<F>(pres, req.j);
    r["J"] = render(j.generators());
    MultiplicityEstimate est;
    if (req.kind == "hs") {
      est = hs_multiplicity(ideal, j, req.limits.n_max);
      r["e"] = est.value.get_str();
    } else {
      const auto seq = hk_sequence(ideal, j, req.limits.e_max);
      est = hk_estimate(seq, seq.dimension);
      r["e_hk"] = est.value.get_str();
      std::ostringstream approx;
      approx.setf(std::ios::fixed);
      approx.precision(6);
      approx << est.value.get_d();
      r["approx"] = approx.str();
    }
    r["status"] = to_string(est.status);
    r["dimension"] = est.sequence.dimension;
    r["lengths"] = est.sequence.values;
    Json evidence = Json::array();
    for (const auto& v : est.evidence) evidence.push_back(v.get_str());
    r[req.kind == "hs" ? "differences" : "ratios"] = evidence;
    if (req.kind == "hk") r["filtration_bound"] = satisfies_filtration_bound(est.sequence);
    if (est.sequence.budget_exhausted) {
      r["budget_exhausted"] = *est.sequence.budget_exhausted;
      o.code = kBudgetExceeded;
    }
  } else {
    throw PreconditionError("unknown command '" + req.kind + "'");
  }
  return o;
}

ScanConfig scan_config(const Request& req) {
  ScanConfig c;
  c.ring = req.ring;
  c.ideal = req.ideal;
  c.invariant = req.invariant;
  c.j = req.j;
  c.mode = req.mode;
  c.orders = req.orders;
  if (c.orders.empty()) {
    for (const auto& [order, eps] : req.fixed_eps) c.orders.push_back(order);
  }
  c.trials = req.trials;
  c.fixed_eps = req.fixed_eps;
  c.degree_window = req.degree_window;
  c.terms_per_eps = req.terms_per_eps;
  c.seed = req.seed;
  c.limits = req.limits;
  c.jobs = req.jobs;
  return c;
}

// ---------------------------------------------------------------------------
// Rendering

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& item : v) out += (out.empty() ? "" : "; ") + scalar_text(item);
    return out;
  }
  return v.dump();
}

/// Two-column key,value CSV of a flat command result.
std::string flat_csv(const Json& result) {
  std::string out = "key,value\r\n";
  for (const auto& [key, value] : result.items()) out += csv_field(key) + "," + csv_field(scalar_text(value)) + "\r\n";
  return out;
}

void emit(std::ostream& out, const Json& result, const std::string& format) {
  if (format == "csv") {
    out << flat_csv(result);
  } else {
    out << result.dump(2) << "\n";
  }
}

void emit(std::ostream& out, const ScanReport& report, const std::string& format) {
  out << (format == "csv" ? report.to_csv() : report.dump());
}

// ---------------------------------------------------------------------------
// Argument parsing

void add_common(CLI::App* sub, Request& req, std::string& ring_text, std::string& ideal_text, std::string& j_text,
                std::string& task_path) {
  sub->add_option("--ring", ring_text, "Inline ring, e.g. \"p=3;vars=x,y,t;K=x*y,x*t\"");
  sub->add_option("--ideal", ideal_text, "Comma-separated generators");
  sub->add_option("--J", j_text, "Generators of J, or 'maximal'");
  sub->add_option("--task", task_path, "JSON task file");
  sub->add_option("--budget", req.limits.max_steps, "Reduction-step budget per Groebner computation");
  sub->add_option("--nmax", req.limits.n_max, "Largest power J^n for Hilbert-Samuel sequences");
  sub->add_option("--emax", req.limits.e_max, "Largest Frobenius exponent e for Hilbert-Kunz sequences");
  sub->add_option("--delta", req.limits.delta, "Tolerance for Hilbert-Kunz verdicts");
  sub->add_option("--monomial-cap", req.limits.monomial_cap, "Cap on monomials per degree window or box");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  std::string ring_text, ideal_text, j_text, task_path, format = "json";
  std::vector<std::string> eps_flags;
  std::string invariant_text, mode_text;
  std::string box_text, orders_text;

  CLI::App app{"Exact local invariants and perturbation experiments for polynomial presentations", "mperturb"};
  app.require_subcommand(1, 1);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gb", "Reduced Groebner basis of K + I"},
      {"dim", "Krull dimension of S/(K + I)"},
      {"colength", "Length of S/(K + I) at the origin"},
      {"h1", "Koszul H1, its annihilator and the H1 condition"},
      {"hs", "Hilbert-Samuel multiplicity e(J, R/I)"},
      {"hk", "Hilbert-Kunz length sequence and estimate"},
      {"scan", "Perturbation stability scan"},
      {"catalog", "List or run the built-in example catalog"},
      {"selftest", "Oracle-equivalence and invariant suites"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    subs[name] = sub;
  }
  for (const char* name : {"gb", "dim", "colength", "h1", "hs", "hk", "scan"}) {
    add_common(subs[name], req, ring_text, ideal_text, j_text, task_path);
  }
  subs["colength"]->add_option("--box", box_text, "Also run the box oracle with these bounds, e.g. 2,2,2");
  auto* scan = subs["scan"];
  scan->add_option("--invariant", invariant_text, "hs, hk, h1cond or dim");
  scan->add_option("--mode", mode_text, "perturbation or roots");
  scan->add_option("--T", orders_text, "Comma-separated orders T");
  scan->add_option("--trials", req.trials, "Random trials per order");
  scan->add_option("--seed", req.seed, "Seed for all randomness");
  scan->add_option("--window", req.degree_window, "Extra degrees above T for random terms");
  scan->add_option("--terms", req.terms_per_eps, "Monomials per random epsilon");
  scan->add_option("--eps", eps_flags, "Fixed perturbation T:eps_1,...,eps_c (repeatable)");
  scan->add_option("--jobs", req.jobs, "Worker threads for scan rows");
  auto* catalog = subs["catalog"];
  catalog->add_option("--run", req.catalog_run, "Entry to run, or 'all'");
  catalog->add_option("--task", task_path, "JSON task file");
  catalog->add_option("--jobs", req.jobs, "Worker threads for scan rows");
  auto* selftest = subs["selftest"];
  selftest->add_option("--seed", req.seed, "Seed for randomized suites");
  std::string mutation;
  selftest->add_option("--mutate", mutation, "Negative control: corrupt the Groebner engine")
      ->check(CLI::IsMember({"drop-pairs"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    for (auto* sub : app.get_subcommands()) {
      if (sub->parsed() && std::string(e.get_name()) == "CallForHelp") {
        out << sub->help();
        return kOk;
      }
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    req.kind = app.get_subcommands().front()->get_name();
    req.drop_pairs = mutation == "drop-pairs";
    if (!task_path.empty()) {
      const std::string invoked = req.kind;
      load_task_file(task_path, req);
      if (req.kind != invoked) {
        throw PreconditionError("task file kind '" + req.kind + "' does not match the command '" + invoked + "'");
      }
    }
    if (!ring_text.empty()) {
      req.ring = parse_inline_ring(ring_text);
      req.ring_given = true;
    }
    if (!ideal_text.empty()) req.ideal = {ideal_text};
    if (!j_text.empty()) req.j = {j_text};
    if (!invariant_text.empty()) req.invariant = parse_invariant(invariant_text);
    if (!mode_text.empty()) {
      if (mode_text == "perturbation") {
        req.mode = ScanMode::perturbation;
      } else if (mode_text == "roots" || mode_text == "root_adjunction") {
        req.mode = ScanMode::root_adjunction;
      } else {
        throw PreconditionError("--mode must be perturbation or roots");
      }
    }
    if (!orders_text.empty()) {
      req.orders.clear();
      for (const auto& o : split(orders_text, ',')) req.orders.push_back(to_unsigned(o, "--T"));
    }
    if (!box_text.empty()) {
      req.box.clear();
      for (const auto& b : split(box_text, ',')) req.box.push_back(to_unsigned(b, "--box"));
    }
    for (const auto& flag : eps_flags) {
      const auto colon = flag.find(':');
      if (colon == std::string::npos) throw PreconditionError("--eps expects T:eps_1,...,eps_c");
      const unsigned order = to_unsigned(flag.substr(0, colon), "--eps order");
      auto& list = req.fixed_eps[order];
      list.clear();
      for (const auto& e : split(flag.substr(colon + 1), ',')) list.push_back(trim(e));
    }
    parse_rational(req.limits.delta);

    if (req.kind == "selftest") {
      const SelftestOptions options{req.seed == 0 ? 1 : req.seed, req.drop_pairs};
      const auto results = run_selftest(options);
      emit(out, to_json(results, options), format);
      const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
      for (const auto& r : results) {
        for (const auto& f : r.failures) err << "FAIL " << r.provenance << " [" << r.name << "]: " << f << "\n";
      }
      return ok ? kOk : kInternalError;
    }
    if (req.kind == "catalog") {
      if (req.catalog_run.empty()) {
        Json list = Json::array();
        for (const auto& e : example_catalog()) {
          list.push_back(Json{{"name", e.name}, {"description", e.description}, {"invariant", to_string(e.config.invariant)}});
        }
        if (format == "csv") {
          std::string csv = "name,invariant,description\r\n";
          for (const auto& e : list) {
            csv += csv_field(e["name"]) + "," + csv_field(e["invariant"]) + "," + csv_field(e["description"]) + "\r\n";
          }
          out << csv;
        } else {
          out << Json{{"catalog", list}}.dump(2) << "\n";
        }
        return kOk;
      }
      std::vector<std::string> names;
      if (req.catalog_run == "all") {
        for (const auto& e : example_catalog()) names.push_back(e.name);
      } else {
        names.push_back(req.catalog_run);
      }
      bool ok = true;
      for (const auto& name : names) {
        ScanConfig config = catalog_entry(name).config;
        config.jobs = req.jobs;
        const auto report = stability_scan(config);
        emit(out, report, format);
        if (!report.meets_expectations()) {
          err << "catalog entry '" << name << "' does not match its embedded expectations\n";
          ok = false;
        }
      }
      return ok ? kOk : kInternalError;
    }

    if (!req.ring_given) {
      req.ring.characteristic = 0;
      req.ring.variables = infer_variables({req.ideal, req.j});
    }
    if (req.kind == "scan") {
      emit(out, stability_scan(scan_config(req)), format);
      return kOk;
    }
    const Outcome o = with_field(req.ring.characteristic, [&](auto field) { return run_algebra(req, field); });
    emit(out, o.result, format);
    if (o.code == kBudgetExceeded) err << "error: step budget exhausted; the sequence above is partial\n";
    return o.code;
  } catch (const BudgetExceeded& e) {
    err << "error: step budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace mperturb::cli
