#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using mperturb::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, HilbertKunzOfNotisoFamily) {
  const auto r = call({"hk", "--ring", "p=3;vars=x,y,t", "--ideal", "x*y + t^2", "--J", "maximal", "--emax", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["ratios"].size(), 4u);
  EXPECT_NEAR(std::stod(j["approx"].get<std::string>()), 1.5, 0.02);
  EXPECT_EQ(j["filtration_bound"], true);
}

TEST(Cli, ColengthOfMaximalIdeal) {
  const auto r = call({"colength", "--ideal", "x,y,t"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["colength"], 1);
}

TEST(Cli, ColengthInfinityAndBoxOracle) {
  auto r = call({"colength", "--ideal", "x*y"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["colength"], "inf");
  r = call({"colength", "--ideal", "x^2, y^3", "--box", "2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["colength"], 6);
  EXPECT_EQ(j["box_oracle"], 6);
}

TEST(Cli, CatalogRunNotiso) {
  const auto r = call({"catalog", "--run", "notiso"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["rows"].size(), 4u);
}

TEST(Cli, CatalogListing) {
  const auto r = call({"catalog"});
  ASSERT_EQ(r.code, 0);
  EXPECT_GE(Json::parse(r.out)["catalog"].size(), 4u);
  EXPECT_EQ(call({"catalog", "--run", "missing"}).code, 2);
}

TEST(Cli, GroebnerBasisAndDimension) {
  auto r = call({"gb", "--ideal", "x - y, y"});
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["groebner_basis"], Json::array({"x", "y"}));
  EXPECT_EQ(j["confluent"], true);
  r = call({"dim", "--ring", "p=3;vars=x,y,t;K=x*y,x*t", "--ideal", "y"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["dimension"], 1);
}

TEST(Cli, H1Report) {
  const auto r = call({"h1", "--ring", "p=3;vars=x,y,t;K=x*y,x*t", "--ideal", "x"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["annihilator"], Json::array({"x"}));
  EXPECT_EQ(j["dim_h1"], 2);
  EXPECT_EQ(j["holds"], false);
}

TEST(Cli, HilbertSamuel) {
  const auto r = call({"hs", "--ring", "p=3;vars=x,y,t;K=x*y,x*t", "--ideal", "x + t^3", "--nmax", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["e"], "3");
  EXPECT_EQ(j["status"], "exact-stabilized");
}

TEST(Cli, ScanIsDeterministicAndFormatIndependent) {
  const std::vector<std::string> args = {"scan",  "--ring", "p=0;vars=x,y,t", "--ideal", "x^2 - y^3", "--invariant",
                                         "hs",    "--T",    "5,6",            "--trials", "2",        "--seed",
                                         "12345"};
  const auto a = call(args);
  const auto b = call(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto csv_args = args;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  const auto c = call(csv_args);
  ASSERT_EQ(c.code, 0);
  const auto j = Json::parse(a.out);
  for (const auto& row : j["rows"]) {
    EXPECT_NE(c.out.find("," + row["value"].get<std::string>() + "," + row["verdict"].get<std::string>()),
              std::string::npos);
  }
}

TEST(Cli, ScanWithFixedEpsilons) {
  const auto r = call({"scan", "--ring", "p=3;vars=x,y,t", "--ideal", "x*y", "--invariant", "hk", "--eps", "2:t^2",
                       "--eps", "3:t^3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][1]["value"], "5/3");
}

TEST(Cli, TaskFile) {
  const auto path = write_temp("mperturb_task.json", R"({
    "ring": {"characteristic": 3, "variables": ["x", "y", "t"], "defining_ideal": ["x*y", "x*t"]},
    "task": {"kind": "hs", "ideal": ["y + x^2"], "J": "maximal"},
    "limits": {"n_max": 10},
    "seed": 4
  })");
  const auto r = call({"hs", "--task", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["e"], "1");
  std::remove(path.c_str());
}

TEST(Cli, TaskFileRejectsUnknownKeys) {
  const auto path = write_temp("mperturb_bad.json", R"({"task": {"kind": "gb", "ideal": "x"}, "extra": 1})");
  const auto r = call({"gb", "--task", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("extra"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, TaskFileKindMustMatchCommand) {
  const auto path = write_temp("mperturb_kind.json", R"({"task": {"kind": "dim", "ideal": "x"}})");
  EXPECT_EQ(call({"gb", "--task", path}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"gb", "--ideal", "x +"}).code, 2);
  EXPECT_EQ(call({"gb", "--ring", "p=4;vars=x", "--ideal", "x"}).code, 2);
  EXPECT_EQ(call({"hk", "--ideal", "x*y"}).code, 2);
  EXPECT_EQ(call({"gb", "--task", "/nonexistent/task.json"}).code, 2);
  EXPECT_EQ(call({"gb", "--ideal", "x^5*y^3 - t^7, x^3*t^2 - y^5, y^2*t^3 - x", "--budget", "3"}).code, 3);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, ErrorMessagesNameThePrecondition) {
  const auto r = call({"hk", "--ideal", "x*y"});
  EXPECT_NE(r.err.find("positive characteristic"), std::string::npos) << r.err;
}

TEST(Cli, CsvForPlainCommands) {
  const auto r = call({"colength", "--ideal", "x^2, y", "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("key,value\r\n", 0), 0u);
  EXPECT_NE(r.out.find("colength,2\r\n"), std::string::npos) << r.out;
}

TEST(Cli, SelftestPassesAndMutationFails) {
  const auto ok = call({"selftest"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(Json::parse(ok.out)["passed"], true);
  EXPECT_EQ(call({"selftest"}).out, ok.out);
  const auto bad = call({"selftest", "--mutate", "drop-pairs"});
  EXPECT_EQ(bad.code, 1);
  const auto j = Json::parse(bad.out);
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["suites"][0]["name"], "confluence");
  EXPECT_EQ(j["suites"][0]["passed"], false);
  EXPECT_NE(bad.err.find("groebner_engine"), std::string::npos);
}
