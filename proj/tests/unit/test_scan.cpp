#include <gtest/gtest.h>

#include <set>

#include "mperturb/errors.hpp"
#include "mperturb/scan.hpp"

using namespace mperturb;

namespace {

const ScanReport& report_for(const std::string& name) {
  static std::map<std::string, ScanReport> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, stability_scan(catalog_entry(name).config)).first;
  return it->second;
}

}  // namespace

TEST(ParseRational, AcceptedForms) {
  EXPECT_EQ(parse_rational("3"), 3);
  EXPECT_EQ(parse_rational("-3/6"), mpq_class(-1, 2));
  EXPECT_EQ(parse_rational("0.05"), mpq_class(1, 20));
  EXPECT_EQ(parse_rational(" 1/20 "), mpq_class(1, 20));
  EXPECT_THROW(parse_rational("abc"), PreconditionError);
  EXPECT_THROW(parse_rational("1/0"), PreconditionError);
  EXPECT_THROW(parse_rational(""), PreconditionError);
}

TEST(Invariant, NamesRoundTrip) {
  for (auto kind : {InvariantKind::hs, InvariantKind::hk, InvariantKind::h1cond, InvariantKind::dim}) {
    EXPECT_EQ(parse_invariant(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_invariant("hilbert"), PreconditionError);
}

TEST(Catalog, ContainsTheWorkedExamples) {
  const auto catalog = example_catalog();
  EXPECT_GE(catalog.size(), 4u);
  std::set<std::string> names;
  for (const auto& e : catalog) names.insert(e.name);
  for (const char* name : {"notiso", "dimfail1-y", "dimfail1-x", "hklimit-xy"}) EXPECT_TRUE(names.count(name)) << name;
  EXPECT_THROW(catalog_entry("nope"), PreconditionError);
}

TEST(Catalog, EmbeddedExpectations) {
  const auto& x = catalog_entry("dimfail1-x").config;
  EXPECT_EQ(x.expected, (std::map<unsigned, std::string>{{1, "1"}, {2, "2"}, {3, "3"}, {4, "4"}}));
  const auto& n = catalog_entry("notiso").config;
  EXPECT_EQ(parse_rational(n.expected.at(2)), mpq_class(3, 2));
  EXPECT_EQ(parse_rational(n.expected.at(3)), mpq_class(5, 3));
  EXPECT_EQ(parse_rational(n.expected.at(4)), mpq_class(7, 4));
  EXPECT_EQ(parse_rational(n.expected.at(5)), mpq_class(9, 5));
}

TEST(Catalog, EveryEntryMeetsItsExpectations) {
  for (const auto& e : example_catalog()) {
    const auto& report = report_for(e.name);
    EXPECT_TRUE(report.meets_expectations()) << e.name;
    for (const auto& row : report.rows) EXPECT_FALSE(row.error.has_value()) << e.name << " T=" << row.T;
  }
}

TEST(Catalog, SemicontinuityWhereTheDimensionIsPreserved) {
  for (const auto& e : example_catalog()) {
    if (e.config.mode != ScanMode::perturbation) continue;
    const auto& report = report_for(e.name);
    const mpq_class base = parse_rational(report.base["value"].get<std::string>());
    const int base_dim = report.base["dimension"].get<int>();
    for (const auto& row : report.rows) {
      if (row.values["dimension"].get<int>() != base_dim) continue;
      EXPECT_LE(parse_rational(row.value), base) << e.name << " T=" << row.T;
    }
  }
}

TEST(Scan, NotisoGapShrinks) {
  const auto& report = report_for("notiso");
  const mpq_class base = parse_rational(report.base["value"].get<std::string>());
  EXPECT_LT(abs(base - 2), mpq_class(1, 20));
  mpq_class previous = 0;
  for (const auto& row : report.rows) {
    const mpq_class v = parse_rational(row.value);
    EXPECT_LT(v, 2);
    EXPECT_GT(v, previous);
    EXPECT_EQ(row.verdict, "differs");
    previous = v;
  }
  EXPECT_FALSE(report.threshold.has_value());
}

TEST(Scan, DimfailYDropsToOne) {
  const auto& report = report_for("dimfail1-y");
  EXPECT_EQ(report.base["value"], "2");
  EXPECT_EQ(report.base["h1_condition"]["holds"], false);
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.value, "1");
    EXPECT_EQ(row.verdict, "differs");
    ASSERT_TRUE(row.values.contains("nak"));
  }
}

TEST(Scan, CuspIsStable) {
  const auto& report = report_for("cusp-stable");
  EXPECT_EQ(report.base["value"], "2");
  EXPECT_EQ(report.base["h1_condition"]["holds"], true);
  EXPECT_EQ(report.rows.size(), 20u);
  for (const auto& row : report.rows) EXPECT_EQ(row.verdict, "match");
  ASSERT_TRUE(report.threshold.has_value());
  EXPECT_LE(*report.threshold, 6u);
}

TEST(Scan, RowsAreOrderedAndReproducible) {
  auto config = catalog_entry("cusp-stable").config;
  config.orders = {6, 4};
  config.trials = 3;
  const auto serial = stability_scan(config);
  config.jobs = 4;
  const auto parallel = stability_scan(config);
  EXPECT_EQ(serial.dump(), parallel.dump());
  ASSERT_EQ(serial.rows.size(), 6u);
  for (std::size_t k = 1; k < serial.rows.size(); ++k) {
    const auto& a = serial.rows[k - 1];
    const auto& b = serial.rows[k];
    EXPECT_TRUE(a.T < b.T || (a.T == b.T && a.trial < b.trial));
  }
  // A single row depends only on (seed, T, trial).
  config.orders = {6};
  const auto alone = stability_scan(config);
  EXPECT_EQ(alone.rows[1].perturbation, serial.rows[4].perturbation);
}

TEST(Scan, ChangingTheSeedChangesPerturbations) {
  auto config = catalog_entry("cusp-stable").config;
  config.orders = {4};
  config.trials = 1;
  const auto a = stability_scan(config);
  config.seed += 1;
  const auto b = stability_scan(config);
  EXPECT_NE(a.rows[0].perturbation, b.rows[0].perturbation);
}

TEST(Scan, JsonRoundTripIsByteIdentical) {
  for (const char* name : {"notiso", "dimfail1-y", "hklimit-xy"}) {
    const auto& report = report_for(name);
    const std::string text = report.dump();
    EXPECT_EQ(ScanReport::from_json(Json::parse(text)).dump(), text) << name;
  }
}

TEST(Scan, JsonCarriesSchemaFields) {
  const Json j = Json::parse(report_for("dimfail1-x").dump());
  for (const char* key : {"meta", "base", "rows", "threshold"}) EXPECT_TRUE(j.contains(key)) << key;
  for (const char* key : {"version", "seed", "limits"}) EXPECT_TRUE(j["meta"].contains(key)) << key;
  for (const auto& row : j["rows"]) {
    for (const char* key : {"T", "trial", "values", "verdict"}) EXPECT_TRUE(row.contains(key)) << key;
  }
}

TEST(Scan, CsvIsRfc4180) {
  const std::string csv = report_for("dimfail1-y").to_csv();
  EXPECT_EQ(csv.rfind("T,trial,perturbation,value,verdict,expected,matches_expected,error\r\n", 0), 0u);
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = csv.find("\r\n", pos)) != std::string::npos; pos += 2) ++lines;
  EXPECT_EQ(lines, 1 + report_for("dimfail1-y").rows.size());
  EXPECT_EQ(csv.find('\n'), csv.find("\r\n") + 1);
}

TEST(Scan, CsvQuotesSpecialCharacters) {
  ScanReport report;
  ScanRow row;
  row.T = 2;
  row.perturbation = {"t^2"};
  row.value = "1";
  row.verdict = "error";
  row.error = "budget, \"tight\"";
  report.rows.push_back(row);
  const std::string csv = report.to_csv();
  EXPECT_NE(csv.find(",\"budget, \"\"tight\"\"\"\r\n"), std::string::npos) << csv;
}

TEST(Scan, FailedRowsDoNotAbortTheScan) {
  ScanConfig config;
  config.ring = RingSpec{0, {"x", "y"}, {}};
  config.ideal = {"x"};
  config.orders = {2, 3};
  config.fixed_eps[2] = {"y - x"};
  config.fixed_eps[3] = {"y^3"};
  const auto report = stability_scan(config);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].verdict, "error");
  EXPECT_TRUE(report.rows[0].error.has_value());
  EXPECT_EQ(report.rows[1].verdict, "match");
  EXPECT_EQ(report.threshold, std::optional<unsigned>(3));
}

TEST(Scan, DimensionAndH1Invariants) {
  ScanConfig config;
  config.ring = RingSpec{3, {"x", "y", "t"}, {"x*y", "x*t"}};
  config.ideal = {"y"};
  config.invariant = InvariantKind::dim;
  config.orders = {2};
  config.fixed_eps[2] = {"x^2"};
  auto report = stability_scan(config);
  EXPECT_EQ(report.base["value"], "1");
  EXPECT_EQ(report.rows[0].value, "1");
  config.invariant = InvariantKind::h1cond;
  report = stability_scan(config);
  EXPECT_EQ(report.base["value"], "false");
  EXPECT_EQ(report.base["values"]["dim_h1"], 1);
}

TEST(Scan, RejectsEmptyGrid) {
  ScanConfig config;
  config.ring = RingSpec{0, {"x"}, {}};
  config.ideal = {"x^2"};
  EXPECT_THROW(stability_scan(config), PreconditionError);
}
