#include <gtest/gtest.h>

#include "vstar/runner.hpp"

using namespace vstar;

namespace {

RunConfig cfg(std::string command, std::string descriptor, std::string field = "GF(2)") {
  RunConfig c;
  c.command = std::move(command);
  c.descriptor = std::move(descriptor);
  c.field = std::move(field);
  return c;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

TEST(Runner, VerifyAgreesAndReportsEveryMethod) {
  const auto r = run(cfg("verify", "D(16)"));
  ASSERT_EQ(r.exit_code, exit_status::agree) << r.output;
  const auto j = Json::parse(r.output);
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["config"]["seed"], 1);
  EXPECT_TRUE(j["all_agree"].get<bool>());
  std::vector<std::string> methods;
  for (const auto& rep : j["reports"]) {
    methods.push_back(rep["method"]);
    EXPECT_EQ(rep["order"]["exponent"], 12);
    EXPECT_FALSE(rep.contains("elapsed_s"));
    for (auto& [k, v] : rep["agreement"].items()) EXPECT_TRUE(v.get<bool>()) << k;
  }
  EXPECT_EQ(methods, (std::vector<std::string>{"formula", "bruteforce", "closure-quotient"}));
}

TEST(Runner, VerifyStructuralForOrder4Inverter) {
  const auto r = run(cfg("verify", "Q(16)"));
  ASSERT_EQ(r.exit_code, exit_status::agree) << r.output;
  const auto j = Json::parse(r.output);
  bool structural = false;
  for (const auto& rep : j["reports"])
    if (rep["method"] == "structural") {
      structural = true;
      EXPECT_EQ(rep["r_order"]["exponent"], 4);
    }
  EXPECT_TRUE(structural);
}

TEST(Runner, VerifyIsByteIdentical) {
  for (const char* d : {"D(8)", "ES(2)", "ESC4(1)", "C(9)"}) {
    auto c = cfg("verify", d, std::string(d) == "C(9)" ? "GF(3)" : "GF(2)");
    c.workers = 3;
    const auto a = run(c), b = run(c);
    EXPECT_EQ(a.output, b.output) << d;
    EXPECT_EQ(a.exit_code, exit_status::agree) << a.output;
  }
}

TEST(Runner, TimingsAreOptIn) {
  auto c = cfg("verify", "D(8)");
  c.timings = true;
  const auto j = Json::parse(run(c).output);
  for (const auto& rep : j["reports"]) EXPECT_TRUE(rep.contains("elapsed_s"));
}

TEST(Runner, SkipsOverBudgetMethods) {
  const auto j = Json::parse(run(cfg("verify", "ES(3)")).output);
  EXPECT_EQ(j["reports"].size(), 1u);
  EXPECT_EQ(j["reports"][0]["method"], "formula");
  EXPECT_EQ(j["skipped"].size(), 2u);
}

TEST(Runner, ExitCodes) {
  EXPECT_EQ(run(cfg("verify", "D(12)")).exit_code, exit_status::usage);
  EXPECT_EQ(run(cfg("verify", "D(8)", "GF(6)")).exit_code, exit_status::usage);
  EXPECT_EQ(run(cfg("frobnicate", "D(8)")).exit_code, exit_status::usage);
  EXPECT_EQ(run(cfg("bruteforce", "ES(2)")).exit_code, exit_status::budget);
  EXPECT_EQ(run(cfg("closure", "ES(3)")).exit_code, exit_status::budget);
  auto c = cfg("inspect", "Q(8)");
  c.element = "1 + z";
  EXPECT_EQ(run(c).exit_code, exit_status::usage);
}

TEST(Runner, PredictFormats) {
  auto c = cfg("predict", "ES(2)");
  auto j = Json::parse(run(c).output);
  EXPECT_EQ(j["prediction"]["lg_size"], 6);
  EXPECT_EQ(j["prediction"]["vstar_order"]["exponent"], 25);
  EXPECT_EQ(j["group_order"], 32);
  c.format = Format::text;
  EXPECT_NE(run(c).output.find("2^25"), std::string::npos);
  c.format = Format::csv;
  const auto l = lines(run(c).output);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], kCsvHeader);
  EXPECT_EQ(l[1], "ES(2),2,formula,2,25,1,,");
}

TEST(Runner, TableRows) {
  RunConfig c;
  c.command = "table";
  c.family = "ES";
  c.from = 2;
  c.to = 4;
  c.predict_only = true;
  c.format = Format::csv;
  auto l = lines(run(c).output);
  ASSERT_EQ(l.size(), 4u);
  EXPECT_EQ(l[1], "ES(2),2,formula,2,25,1,,");
  EXPECT_EQ(l[2], "ES(3),2,formula,2,91,1,,");
  EXPECT_EQ(l[3], "ES(4),2,formula,2,391,1,,");

  c.family = "D";
  c.from = 2;
  c.to = 3;
  c.predict_only = false;
  const auto r = run(c);
  EXPECT_EQ(r.exit_code, exit_status::agree);
  l = lines(r.output);
  ASSERT_EQ(l.size(), 7u);
  EXPECT_EQ(l[4], "D(16),2,formula,2,12,1,true,");

  c.family = "X";
  EXPECT_EQ(run(c).exit_code, exit_status::usage);
}

TEST(Runner, CsvQuotesCommas) {
  auto c = cfg("verify", "SDI(A(2,4); b=2)");
  c.format = Format::csv;
  const auto l = lines(run(c).output);
  ASSERT_GE(l.size(), 2u);
  EXPECT_EQ(l[1].rfind("\"SDI(A(2,4); b=2)\",2,formula,2,13,1,true,", 0), 0u) << l[1];
}

TEST(Runner, Inspect) {
  auto c = cfg("inspect", "Q(8)");
  c.element = "1 + a + b";
  const auto j = Json::parse(run(c).output);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["lg_size"], 3);
  EXPECT_EQ(j["center"].size(), 2u);
  EXPECT_EQ(j["element"]["unitary"], false);
  EXPECT_EQ(j["element"]["star"], "1 + a^3 + a^2*b");
  EXPECT_EQ(j["element"]["augmentation"], "1");
}

TEST(Runner, ClosureCommand) {
  const auto j = Json::parse(run(cfg("closure", "ESC4(1)")).output);
  EXPECT_EQ(j["reports"][0]["sk_order"]["exponent"], 4);
  EXPECT_EQ(j["reports"][0]["order"]["exponent"], 11);
  EXPECT_TRUE(j["quotient_valid"].get<bool>());
}

TEST(Runner, QuotientApplicability) {
  const Field k2(2, 1), k3(3, 1);
  EXPECT_TRUE(symmetric_quotient_applies(build_group("Y(D(8), Q(8))"), k2));
  EXPECT_TRUE(symmetric_quotient_applies(build_group("ES(2)"), k2));
  EXPECT_TRUE(symmetric_quotient_applies(build_group("Q(8)"), k2));
  EXPECT_FALSE(symmetric_quotient_applies(build_group("Q(16)"), k2));
  EXPECT_FALSE(symmetric_quotient_applies(build_group("SDI(A(2,4); b=4, sq=a2^2)"), k2));
  EXPECT_FALSE(symmetric_quotient_applies(build_group("Y(D(8), C(4))"), k2));
  EXPECT_FALSE(symmetric_quotient_applies(build_group("C(9)"), k3));
}
