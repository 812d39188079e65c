// End-to-end tests of the pasym binary; the executable path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = g_binary + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), std::move(out)};
}

}  // namespace

TEST_CASE("exact") {
  RunResult r = run_cli("exact --n 10");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "42\n");
  r = run_cli("exact --n 0");
  CHECK(r.out == "1\n");
  r = run_cli("exact --n 100");
  CHECK(r.out == "190569292\n");
}

TEST_CASE("coeffs json") {
  RunResult r = run_cli("coeffs --kind ratio --k 1 --N 3 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "ratio");
  CHECK(j["k"] == 1);
  CHECK(j["N"] == 3);
  REQUIRE(j["coefficients"].size() == 4);
  CHECK(j["coefficients"][0].get<std::string>().substr(0, 4) == "1.00");
  CHECK(j["cutoff"] == 529);
  CHECK(j.contains("error_constant"));
  // 72 significant digits at 256 bits: "d." + 71 digits + "e+xx"
  std::string c1 = j["coefficients"][1].get<std::string>();
  CHECK(c1.find('e') == 73);
}

TEST_CASE("approx and cutoff error") {
  RunResult r = run_cli("approx --kind ratio --n 600 --k 1 --N 1 --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 600);
  CHECK(j.contains("center"));
  CHECK(j.contains("radius"));
  CHECK(j["prefactor"].get<std::string>().substr(0, 4) == "1.00");
  // below cutoff: usage error
  r = run_cli("approx --kind ratio --n 100 --k 1 --N 1");
  CHECK(r.exit_code == 2);
  r = run_cli("approx --kind inverse --n 100 --N 2 --format json");
  CHECK(r.exit_code == 0);
}

namespace {

// Structural validation against schema/report.schema.json (draft-07): the
// required keys, their types, closed property sets, and the status enum.
void check_against_schema(const nlohmann::json& j) {
  REQUIRE(j.is_object());
  for (const char* key : {"suite", "ctx", "cases", "summary"}) CHECK(j.contains(key));
  CHECK(j.size() == 4);
  CHECK(j["suite"].is_string());
  CHECK(j["ctx"].is_object());
  CHECK(j["ctx"].size() == 1);
  CHECK(j["ctx"]["bits"].is_number_integer());
  CHECK(j["ctx"]["bits"].get<int>() >= 64);
  REQUIRE(j["cases"].is_array());
  for (const auto& c : j["cases"]) {
    CHECK(c.size() == 5);
    CHECK(c["params"].is_object());
    for (const auto& [key, value] : c["params"].items()) {
      (void)key;
      CHECK(value.is_string());
    }
    for (const char* key : {"lhs", "rhs", "margin"}) CHECK(c[key].is_string());
    std::string status = c["status"].get<std::string>();
    bool valid_status = status == "pass" || status == "fail" || status == "ambiguous";
    CHECK(valid_status);
  }
  const auto& s = j["summary"];
  CHECK(s.size() == 5);
  for (const char* key : {"cases", "pass", "fail", "ambiguous"}) {
    CHECK(s[key].is_number_integer());
    CHECK(s[key].get<long>() >= 0);
  }
  CHECK(s["max_tightness"].is_string());
}

}  // namespace

TEST_CASE("verify exit codes and schema conformance") {
  RunResult r = run_cli("verify --suite log_concavity --format json");
  REQUIRE(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  check_against_schema(j);
  CHECK(j["suite"] == "log_concavity");
  CHECK(j["ctx"]["bits"] == 256);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["ambiguous"] == 0);
  CHECK(j["summary"]["cases"] == 975);

  r = run_cli("verify --suite coefficient_oracle --k-max 1 --format json --bits 128");
  REQUIRE(r.exit_code == 0);
  j = nlohmann::json::parse(r.out);
  check_against_schema(j);
  CHECK(j["ctx"]["bits"] == 128);

  r = run_cli("verify --suite nope");
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify determinism: byte-identical output") {
  const std::string args =
      "verify --suite main_theorem --k-max 1 --N-max 1 --samples 5 --format json";
  RunResult a = run_cli(args);
  RunResult b = run_cli(args);
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  RunResult c = run_cli(args + " --seed 7");
  CHECK(a.out != c.out);
}

TEST_CASE("tightness output") {
  RunResult r = run_cli(
      "tightness --suite main_theorem --k-max 1 --N-max 1 --samples 3 --format csv");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("k,N,n,center,radius,exact,ratio,flagged\n") == 0);
}

TEST_CASE("usage errors") {
  CHECK(run_cli("exact").exit_code == 2);          // missing --n
  CHECK(run_cli("frobnicate").exit_code == 2);     // unknown subcommand
  CHECK(run_cli("exact --n 10 --bogus").exit_code == 2);
  CHECK(run_cli("coeffs --kind sideways").exit_code == 2);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <pasym-binary>\n", argv[0]);
    return 1;
  }
  g_binary = argv[1];
  doctest::Context context;
  return context.run();
}
