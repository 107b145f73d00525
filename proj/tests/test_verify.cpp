#include "doctest.h"
#include "seminf/verify.hpp"

using namespace seminf;

TEST_SUITE_BEGIN("verify");

TEST_CASE("lemma1 suite passes for n in {2, 3}") {
  for (int n : {2, 3}) {
    VerifyOptions opt;
    opt.n = n;
    const SuiteReport report = verify_lemma1(opt);
    CHECK(report.all_pass());
    CHECK(report.lines.size() == 14);  // seven lines per algebra
  }
}

TEST_CASE("lemma2 suite passes and carries the informational searches") {
  VerifyOptions opt;
  opt.n = 2;
  const SuiteReport report = verify_lemma2(opt);
  CHECK(report.all_pass());
  int info = 0;
  for (const auto& line : report.lines) info += !line.gating;
  CHECK(info == 2);
}

TEST_CASE("theorem-mechanics suite passes at reduced bounds") {
  VerifyOptions opt;
  opt.n = 2;
  opt.vars = 2;
  opt.max_size = 4;
  opt.evaluations_per_identity = 50;
  const SuiteReport report = verify_theorem_mechanics(opt);
  CHECK(report.all_pass());
  CHECK(report.seed == kDefaultSeed);
}

TEST_CASE("suite formatting marks failures") {
  SuiteReport report;
  report.suite = "demo";
  report.lines.push_back({"good", true, true, ""});
  report.lines.push_back({"bad", false, true, "boom"});
  report.lines.push_back({"note", false, false, ""});
  CHECK_FALSE(report.all_pass());
  const std::string text = format_suite(report);
  CHECK(text.find("PASS good") != std::string::npos);
  CHECK(text.find("FAIL bad [boom]") != std::string::npos);
  CHECK(text.find("INFO note") != std::string::npos);
  CHECK(text.find("result: FAIL") != std::string::npos);
}

TEST_SUITE_END();
