#include <doctest.h>

#include <memory>

#include "pasym/errors.hpp"
#include "pasym/harness.hpp"
#include "test_helpers.hpp"

using namespace pasym;
using pasym_test::ctx256;

namespace {
const PartitionTable& small_table() {
  static PartitionTable table(2200);
  return table;
}
}  // namespace

TEST_CASE("suite names round trip") {
  for (Suite s : all_suites()) {
    auto back = suite_from_name(suite_name(s));
    REQUIRE(back.has_value());
    CHECK(*back == s);
  }
  CHECK_FALSE(suite_from_name("nope").has_value());
}

TEST_CASE("log-concavity suite") {
  auto ctx = ctx256();
  VerificationReport r = run_suite(Suite::log_concavity, {}, &small_table(), ctx);
  CHECK(r.cases.size() == 975);
  CHECK(r.pass_count == 975);
  CHECK(r.fail_count == 0);
  CHECK(r.ambiguous_count == 0);
  CHECK(r.pass_count + r.fail_count + r.ambiguous_count == r.cases.size());
}

TEST_CASE("sizing errors carry the required n_max") {
  auto ctx = ctx256();
  PartitionTable tiny(50);
  try {
    run_suite(Suite::log_concavity, {}, &tiny, ctx);
    FAIL("expected SizingError");
  } catch (const SizingError& e) {
    CHECK(e.required_n_max == 1001);
  }
  CHECK_THROWS_AS(run_suite(Suite::log_concavity, {}, nullptr, ctx), SizingError);
}

TEST_CASE("small main-theorem sweep passes and serializes") {
  auto ctx = ctx256();
  SuiteParams p;
  p.k_max = 1;
  p.N_max = 1;
  p.samples = 3;
  p.span = 200;
  VerificationReport r = run_suite(Suite::main_theorem, p, &small_table(), ctx);
  CHECK(r.cases.size() == 4);  // boundary + 3 samples
  CHECK(r.all_passed());
  CHECK(!r.max_tightness.empty());

  auto j = report_to_json(r);
  CHECK(j["suite"] == "main_theorem");
  CHECK(j["ctx"]["bits"] == 256);
  CHECK(j["cases"].size() == 4);
  CHECK(j["summary"]["pass"] == 4);
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("params"));
    CHECK(c.contains("lhs"));
    CHECK(c.contains("rhs"));
    CHECK(c.contains("margin"));
    CHECK(c["status"] == "pass");
    CHECK(c["params"].contains("k"));
    CHECK(c["params"].contains("n"));
    CHECK(c["params"].contains("exact"));
  }

  std::string csv = report_to_csv(r);
  CHECK(csv.find("k,N,n,center,radius,exact,lhs,rhs,margin,status\n") == 0);
  // one header + one line per case
  std::size_t lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 5);
}

TEST_CASE("determinism: identical params produce byte-identical reports") {
  auto ctx = ctx256();
  SuiteParams p;
  p.k_max = 1;
  p.N_max = 1;
  p.samples = 5;
  p.span = 300;
  VerificationReport a = run_suite(Suite::main_theorem, p, &small_table(), ctx);
  VerificationReport b = run_suite(Suite::main_theorem, p, &small_table(), ctx);
  CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  CHECK(report_to_csv(a) == report_to_csv(b));
  // a different seed moves the samples
  SuiteParams q = p;
  q.seed = 999;
  VerificationReport c = run_suite(Suite::main_theorem, q, &small_table(), ctx);
  CHECK(report_to_json(a).dump() != report_to_json(c).dump());
}

TEST_CASE("boundary n = cutoff is always included") {
  auto ctx = ctx256();
  SuiteParams p;
  p.k_max = 1;
  p.N_max = 1;
  p.samples = 1;
  p.span = 100;
  VerificationReport r = run_suite(Suite::main_theorem, p, &small_table(), ctx);
  REQUIRE(!r.cases.empty());
  bool found = false;
  for (const auto& [key, value] : r.cases.front().params)
    if (key == "n" && value == "529") found = true;
  CHECK(found);
}

TEST_CASE("tightness profile ratios are in (0, 1]") {
  auto ctx = ctx256();
  SuiteParams p;
  p.k_max = 1;
  p.N_max = 1;
  p.samples = 5;
  p.span = 500;
  TightnessTable t = tightness_profile(Suite::main_theorem, p, &small_table(), ctx);
  CHECK(t.rows.size() == 6);
  for (const auto& row : t.rows) {
    CHECK_FALSE(row.flagged);
    CHECK(std::stod(row.ratio) > 0.0);
    CHECK(std::stod(row.ratio) <= 1.0);
  }
}

TEST_CASE("empty parameter range gives an empty table") {
  auto ctx = ctx256();
  SuiteParams p;
  p.t_max = 1;  // sj_envelopes t-range 2..1 is empty
  TightnessTable t = tightness_profile(Suite::sj_envelopes, p, nullptr, ctx);
  CHECK(t.rows.empty());
}

TEST_CASE("coefficient oracle suite passes") {
  auto ctx = ctx256();
  SuiteParams p;
  p.k_max = 2;
  VerificationReport r = run_suite(Suite::coefficient_oracle, p, nullptr, ctx);
  CHECK(r.all_passed());
  // omega: 2 k-values x 13, g: 11, c: 2 x 7
  CHECK(r.cases.size() == 2 * 13 + 11 + 2 * 7);
}

TEST_CASE("failing and ambiguous cases serialize correctly") {
  VerificationReport r;
  r.suite = "synthetic";
  r.bits = 256;
  CaseRecord good{{{"n", "1"}}, "1.0e+00", "2.0e+00", "1.0e-39", CheckStatus::pass, true, 0.5};
  CaseRecord bad{{{"n", "2"}}, "3.0e+00", "2.0e+00", "1.0e-39", CheckStatus::fail, true, 1.5};
  CaseRecord odd{{{"n", "3"}}, "2.0e+00", "2.0e+00", "1.0e-39", CheckStatus::ambiguous, true, 1.0};
  r.cases = {good, bad, odd};
  r.pass_count = 1;
  r.fail_count = 1;
  r.ambiguous_count = 1;
  CHECK_FALSE(r.all_passed());

  auto j = report_to_json(r);
  CHECK(j["cases"][1]["status"] == "fail");
  CHECK(j["cases"][2]["status"] == "ambiguous");
  CHECK(j["summary"]["fail"] == 1);

  std::string csv = report_to_csv(r);
  CHECK(csv.find("fail") != std::string::npos);
  CHECK(csv.find("ambiguous") != std::string::npos);

  // text output lists every non-passing case
  std::string text = report_to_text(r);
  CHECK(text.find("fail: 1") != std::string::npos);
  CHECK(text.find("n=2") != std::string::npos);
  CHECK(text.find("n=3") != std::string::npos);
  CHECK(text.find("n=1 ") == std::string::npos);  // passes are not listed
}

TEST_CASE("lehmer suite skips the excluded pair") {
  auto ctx = ctx256();
  SuiteParams p;
  p.lehmer_span = 10;
  VerificationReport r = run_suite(Suite::lehmer, p, &small_table(), ctx);
  // m = 2: n = 1..10 minus n = 6 -> 9 cases; m = 3: 10; m = 4: 10
  CHECK(r.cases.size() == 29);
  CHECK(r.all_passed());
  for (const auto& c : r.cases) {
    bool is_excluded = false;
    bool m2 = false;
    for (const auto& [key, value] : c.params) {
      if (key == "m" && value == "2") m2 = true;
      if (key == "n" && value == "6") is_excluded = true;
    }
    bool both = m2 && is_excluded;
    CHECK_FALSE(both);
  }
}
