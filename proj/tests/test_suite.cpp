#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "apery/suite.hpp"
#include "apery/version.hpp"

using apery::ClaimResult;
using apery::OutputFormat;
using apery::Rat;
using apery::SuiteConfig;
using apery::VerificationReport;

TEST_CASE("format names parse and print consistently") {
  for (auto f : {OutputFormat::json, OutputFormat::csv, OutputFormat::text}) {
    CHECK(apery::parse_format(apery::format_name(f)) == f);
  }
  CHECK_THROWS_AS(apery::parse_format("yaml"), apery::UsageError);
  CHECK_THROWS_AS(apery::parse_format(""), apery::UsageError);
}

TEST_CASE("config validation rejects nonsense") {
  SuiteConfig ok;
  ok.claims = {"lem-rutkowski"};

  SuiteConfig c = ok;
  c.prime_min = 2;
  CHECK_THROWS_AS(apery::run_suite(c), apery::UsageError);

  c = ok;
  c.prime_min = 11;
  c.prime_max = 7;
  CHECK_THROWS_AS(apery::run_suite(c), apery::UsageError);

  c = ok;
  c.eta_order = 0;
  CHECK_THROWS_AS(apery::run_suite(c), apery::UsageError);

  c = ok;
  c.workers = 0;
  CHECK_THROWS_AS(apery::run_suite(c), apery::UsageError);

  c = ok;
  c.generalization_pairs = {{4, 1}};
  CHECK_THROWS_AS(apery::run_suite(c), apery::UsageError);

  c = ok;
  c.generalization_pairs = {{3, 0}};
  CHECK_THROWS_AS(apery::run_suite(c), apery::UsageError);

  c = ok;
  c.claims = {"thm-main2", "no-such-claim"};
  CHECK_THROWS_AS(apery::run_suite(c), apery::UsageError);
}

TEST_CASE("a single-claim sweep expands over the prime range in order") {
  SuiteConfig c;
  c.claims = {"thm-main2"};
  c.prime_min = 3;
  c.prime_max = 13;
  VerificationReport r = apery::run_suite(c);
  REQUIRE(r.results.size() == 5);  // 3, 5, 7, 11, 13
  std::int64_t expected[] = {3, 5, 7, 11, 13};
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(r.results[i].claim_id == "thm-main2");
    CHECK(r.results[i].parameters.at("p") == expected[i]);
    CHECK(r.results[i].passed);
  }
  CHECK(r.summary.pass == 5);
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.finding == 0);
  CHECK(apery::exit_code_for(r) == 0);
  CHECK(r.tool_version == APERY_VERSION);
}

TEST_CASE("claims proved only beyond p = 3 start their sweep at 5") {
  SuiteConfig c;
  c.claims = {"thm-main1"};
  c.prime_min = 3;
  c.prime_max = 5;
  VerificationReport r = apery::run_suite(c);
  REQUIRE(r.results.size() == 1);
  CHECK(r.results[0].parameters.at("p") == 5);
}

TEST_CASE("empty claim list resolves to the registry minus selftest fixtures") {
  SuiteConfig c;
  c.prime_min = 3;
  c.prime_max = 3;  // keep the expansion tiny
  c.generalization_pairs = {{3, 1}};
  c.eta_order = 2;
  VerificationReport r = apery::run_suite(c);
  CHECK(r.config.claims.size() == 15);
  for (const auto& id : r.config.claims) {
    CHECK(id.rfind("selftest-", 0) != 0);
  }
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.finding == 0);
  CHECK(apery::exit_code_for(r) == 0);
}

TEST_CASE("result order: claim id first, then p, then remaining parameters") {
  ClaimResult a{"cor4", {{"m", 2}, {"j", 0}, {"p", 3}}, {}, true};
  ClaimResult b{"cor4", {{"m", 1}, {"j", 0}, {"p", 5}}, {}, true};
  CHECK(apery::result_order(a, b));   // p = 3 before p = 5 despite larger m
  CHECK_FALSE(apery::result_order(b, a));

  ClaimResult c{"lem5", {{"p", 5}, {"j", 2}}, {}, true};
  ClaimResult d{"lem5", {{"p", 5}, {"j", 3}}, {}, true};
  CHECK(apery::result_order(c, d));
  CHECK(apery::result_order(a, c));  // "cor4" < "lem5"
}

TEST_CASE("reports are byte-identical across worker counts") {
  SuiteConfig c;
  c.claims = {"thm-main2", "lem-rutkowski", "facp"};
  c.prime_min = 3;
  c.prime_max = 11;

  SuiteConfig c1 = c;
  c1.workers = 1;
  SuiteConfig c4 = c;
  c4.workers = 4;

  VerificationReport r1 = apery::run_suite(c1);
  VerificationReport r4 = apery::run_suite(c4);
  CHECK(r1 == r4);
  CHECK(apery::to_json(r1) == apery::to_json(r4));
  CHECK(apery::to_csv(r1) == apery::to_csv(r4));
  CHECK(apery::to_text(r1) == apery::to_text(r4));
}

TEST_CASE("worker errors propagate out of the pool") {
  SuiteConfig c;
  c.claims = {"gen-p3r"};
  c.generalization_pairs = {{3, 1}, {3, 7}};  // 3^7 = 2187 exceeds the cap
  c.workers = 1;
  CHECK_THROWS_AS(apery::run_suite(c), apery::PreconditionError);
  c.workers = 4;
  CHECK_THROWS_AS(apery::run_suite(c), apery::PreconditionError);
}

TEST_CASE("JSON rendering round-trips through from_json") {
  SuiteConfig c;
  c.claims = {"thm-main2", "gen-p3r"};
  c.prime_min = 3;
  c.prime_max = 7;
  c.generalization_pairs = {{3, 2}};
  c.output_format = OutputFormat::json;
  VerificationReport r = apery::run_suite(c);
  REQUIRE(r.results.size() == 4);
  CHECK(r.results[0].claim_id == "gen-p3r");  // sorts before thm-main2

  std::string text = apery::to_json(r);
  VerificationReport back = apery::from_json(text);
  CHECK(back == r);
  CHECK(apery::to_json(back) == text);

  // Rational and valuation payloads survive exactly.
  CHECK(back.results[1].verdicts[0].lhs == Rat(8081, 4096));
  CHECK(back.results[0].verdicts[0].exponent == apery::PadicVal::of(6));
}

TEST_CASE("exact-equality verdicts serialize their infinite exponent") {
  SuiteConfig c;
  c.claims = {"lem-rutkowski"};
  VerificationReport r = apery::run_suite(c);
  std::string text = apery::to_json(r);
  CHECK(text.find("\"m\": \"inf\"") != std::string::npos);
  VerificationReport back = apery::from_json(text);
  CHECK(back.results[0].verdicts[0].exponent.is_infinite());
  CHECK(back == r);
}

TEST_CASE("from_json rejects malformed input") {
  CHECK_THROWS_AS(apery::from_json("{ not json"), apery::UsageError);
  CHECK_THROWS_AS(apery::from_json("{}"), apery::UsageError);
  CHECK_THROWS_AS(apery::from_json("[1, 2, 3]"), apery::UsageError);
  // Structurally valid but with a junk valuation marker.
  SuiteConfig c;
  c.claims = {"lem-rutkowski"};
  std::string good = apery::to_json(apery::run_suite(c));
  std::string bad = good;
  auto pos = bad.find("\"inf\"");
  REQUIRE(pos != std::string::npos);
  bad.replace(pos, 5, "\"nan\"");
  CHECK_THROWS_AS(apery::from_json(bad), apery::UsageError);
}

TEST_CASE("CSV has a header plus one row per verdict") {
  SuiteConfig c;
  c.claims = {"lem7"};  // two verdicts per instance
  c.prime_min = 3;
  c.prime_max = 11;  // p = 5, 7, 11
  VerificationReport r = apery::run_suite(c);
  REQUIRE(r.results.size() == 3);
  std::string csv = apery::to_csv(r);
  std::istringstream in(csv);
  std::string line;
  long lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 1 + 3 * 2);
  CHECK(csv.rfind("claim_id,parameters,lhs,rhs,p,m,valuation,holds,passed\n", 0) == 0);
  CHECK(csv.find("lem7,p=5,375/8192,0,5,3,3,true,true") != std::string::npos);
}

TEST_CASE("text rendering shows status lines and the summary") {
  SuiteConfig c;
  c.claims = {"thm-main2"};
  c.prime_min = 3;
  c.prime_max = 5;
  VerificationReport r = apery::run_suite(c);
  std::string text = apery::to_text(r);
  CHECK(text.find("PASS    thm-main2 p=3") != std::string::npos);
  CHECK(text.find("PASS    thm-main2 p=5") != std::string::npos);
  CHECK(text.find("pass=2 fail=0 finding=0") != std::string::npos);
  CHECK(text.find(APERY_VERSION) != std::string::npos);

  CHECK(apery::render(r, OutputFormat::text) == apery::to_text(r));
  CHECK(apery::render(r, OutputFormat::json) == apery::to_json(r));
  CHECK(apery::render(r, OutputFormat::csv) == apery::to_csv(r));
}

TEST_CASE("text rendering annotates failures with the failing verdict") {
  VerificationReport r;
  r.tool_version = APERY_VERSION;
  ClaimResult bad = apery::verify_selftest(false, 0);
  ClaimResult finding = apery::verify_selftest(true, 0);
  r.results = {bad, finding};
  r.summary.fail = 1;
  r.summary.finding = 1;
  std::string text = apery::to_text(r);
  CHECK(text.find("FAIL    selftest-proven") != std::string::npos);
  CHECK(text.find("FINDING selftest-conjectural") != std::string::npos);
  CHECK(text.find("lhs = 0, rhs = 1") != std::string::npos);
  CHECK(apery::exit_code_for(r) == 1);
}

TEST_CASE("exit codes rank failures above findings") {
  VerificationReport all_pass;
  all_pass.summary = {10, 0, 0};
  CHECK(apery::exit_code_for(all_pass) == 0);

  VerificationReport with_finding;
  with_finding.summary = {9, 0, 1};
  CHECK(apery::exit_code_for(with_finding) == 2);

  VerificationReport with_fail;
  with_fail.summary = {8, 1, 1};
  CHECK(apery::exit_code_for(with_fail) == 1);
}
