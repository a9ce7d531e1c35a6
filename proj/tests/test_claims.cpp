#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "apery/apery_numbers.hpp"
#include "apery/claims.hpp"
#include "apery/combinatorics.hpp"

using apery::ClaimResult;
using apery::PadicVal;
using apery::Rat;

TEST_CASE("registry: canonical order, lookup, conjectural flags") {
  const auto& reg = apery::claim_registry();
  REQUIRE(reg.size() == 17);
  CHECK(reg.front().id == "thm-main1");
  CHECK(reg[1].id == "thm-main2");
  CHECK(reg.back().id == "selftest-conjectural");

  CHECK(apery::find_claim("thm-main1") != nullptr);
  CHECK(apery::find_claim("lem-rutkowski") != nullptr);
  CHECK(apery::find_claim("zzz-not-a-claim") == nullptr);

  for (const auto& info : reg) {
    bool expect_conjectural = info.id == "gen-p3r" || info.id == "selftest-conjectural";
    CHECK(info.conjectural == expect_conjectural);
    CHECK_FALSE(info.parameters.empty());
  }
}

TEST_CASE("result_is_conjectural: instance-level status") {
  CHECK(apery::result_is_conjectural("selftest-conjectural", {}));
  CHECK(apery::result_is_conjectural("gen-p3r", {{"p", 3}, {"r", 2}}));
  CHECK_FALSE(apery::result_is_conjectural("gen-p3r", {{"p", 3}, {"r", 1}}));
  CHECK_FALSE(apery::result_is_conjectural("thm-main1", {{"p", 5}}));
  CHECK_FALSE(apery::result_is_conjectural("selftest-proven", {}));
}

TEST_CASE("thm-main1 at p = 5: frozen values") {
  ClaimResult r = apery::verify_main1(5);
  CHECK(r.passed);
  REQUIRE(r.verdicts.size() == 1);
  CHECK(r.verdicts[0].lhs == Rat(5501));  // I(f_2^2) = 1+49+361+1369+3721
  CHECK(r.verdicts[0].rhs == Rat(1));
  CHECK(r.verdicts[0].prime == 5);
  CHECK(r.verdicts[0].exponent == PadicVal::of(3));
  CHECK(r.verdicts[0].diff_valuation == PadicVal::of(3));  // 5500 = 2^2 5^3 11
  CHECK(r.verdicts[0].holds);
  CHECK(r.claim_id == "thm-main1");
  CHECK(r.parameters.at("p") == 5);
}

TEST_CASE("thm-main2 at p = 3: frozen values") {
  ClaimResult r = apery::verify_main2(3);
  CHECK(r.passed);
  REQUIRE(r.verdicts.size() == 1);
  CHECK(r.verdicts[0].lhs == Rat(8081, 4096));
  CHECK(r.verdicts[0].rhs == Rat(-1));
  CHECK(r.verdicts[0].diff_valuation == PadicVal::of(3));  // 12177 = 3^3 11 41
  CHECK(r.verdicts[0].holds);
}

TEST_CASE("main theorems and the conjecture hold for all odd primes up to 60") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59}) {
    CAPTURE(p);
    if (p > 3) CHECK(apery::verify_main1(p).passed);
    CHECK(apery::verify_main2(p).passed);
    CHECK(apery::verify_kw_conjecture(p).passed);
  }
}

TEST_CASE("kw-conjecture lhs coincides exactly with the thm-main2 lhs") {
  // g agrees with J on 0..p-1, so both sides sum the same squares.
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    ClaimResult kw = apery::verify_kw_conjecture(p);
    ClaimResult m2 = apery::verify_main2(p);
    CAPTURE(p);
    CHECK(kw.verdicts[0].lhs == m2.verdicts[0].lhs);
    CHECK(kw.verdicts[0].rhs == m2.verdicts[0].rhs);
  }
}

TEST_CASE("kw-theorem62: sample instances and frozen small case") {
  ClaimResult r = apery::verify_kw_theorem62(3, 1, 1);
  CHECK(r.passed);
  REQUIRE(r.verdicts.size() == 1);
  CHECK(r.verdicts[0].lhs == Rat(147, 256));  // J(3)
  CHECK(r.verdicts[0].rhs == Rat(3, 4));      // J(1)
  CHECK(r.verdicts[0].diff_valuation == PadicVal::of(2));  // -45/256

  CHECK(apery::verify_kw_theorem62(3, 2, 2).passed);
  CHECK(apery::verify_kw_theorem62(5, 1, 2).passed);
  CHECK(apery::verify_kw_theorem62(7, 3, 1).passed);
  CHECK(apery::verify_kw_theorem62(13, 1, 1).passed);

  CHECK_THROWS_AS(apery::verify_kw_theorem62(4, 1, 1), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_kw_theorem62(3, 0, 1), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_kw_theorem62(3, 1, 0), apery::PreconditionError);
  // Index cap: 3^10 > 20000.
  CHECK_THROWS_AS(apery::verify_kw_theorem62(3, 1, 10), apery::PreconditionError);
}

TEST_CASE("gen-p3r: proven instance r = 1 and conjectural instance r = 2") {
  ClaimResult r1 = apery::verify_generalization(3, 1);
  CHECK(r1.passed);
  CHECK(r1.verdicts[0].exponent == PadicVal::of(3));
  CHECK(r1.verdicts[0].lhs == Rat(8081, 4096));

  ClaimResult r2 = apery::verify_generalization(3, 2);
  CHECK(r2.passed);
  CHECK(r2.verdicts[0].exponent == PadicVal::of(6));

  CHECK(apery::verify_generalization(5, 1).passed);
  CHECK(apery::verify_generalization(7, 1).passed);

  CHECK_THROWS_AS(apery::verify_generalization(3, 0), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_generalization(2048, 1), apery::PreconditionError);
  // Index cap: 3^7 = 2187 > 2000.
  CHECK_THROWS_AS(apery::verify_generalization(3, 7), apery::PreconditionError);
}

TEST_CASE("eq-three at p = 5: verdict layout and frozen coefficient case") {
  ClaimResult r = apery::verify_eq_three(5);
  CHECK(r.passed);
  // 1 integral congruence + coefficient congruences for j = 0, 1, 2.
  REQUIRE(r.verdicts.size() == 4);
  CHECK(r.verdicts[0].exponent == PadicVal::of(3));
  // j = 2: (-1)^2 binom(-1/2,2)^2 = 9/64 vs binom(2,2) binom(4,2) = 6.
  CHECK(r.verdicts[3].lhs == Rat(9, 64));
  CHECK(r.verdicts[3].rhs == Rat(6));
  CHECK(r.verdicts[3].exponent == PadicVal::of(2));
  CHECK(r.verdicts[3].diff_valuation == PadicVal::of(3));  // -375/64
  for (std::int64_t p : {5, 7, 11, 13, 17}) CHECK(apery::verify_eq_three(p).passed);
  CHECK_THROWS_AS(apery::verify_eq_three(3), apery::PreconditionError);
}

TEST_CASE("lem5 at p = 5: all three shapes with frozen values") {
  // j = n = 2: mod p^2 verdict plus the j = n mod p^3 shape.
  ClaimResult at_n = apery::verify_lem5(5, 2);
  CHECK(at_n.passed);
  REQUIRE(at_n.verdicts.size() == 2);
  CHECK(at_n.verdicts[1].lhs == Rat(496));     // I(f_2 binom(x,2))
  CHECK(at_n.verdicts[1].rhs == Rat(77, 12));  // 1/6 + 25 R2, R2 = 1/4
  CHECK(at_n.verdicts[1].exponent == PadicVal::of(3));
  CHECK(at_n.verdicts[1].diff_valuation == PadicVal::of(3));  // 5875/12 = 5^3 47/12

  // j = 1 < n: the mod p^3 shape is p^2 (-1)^{n+j} R2.
  ClaimResult below = apery::verify_lem5(5, 1);
  CHECK(below.passed);
  REQUIRE(below.verdicts.size() == 2);
  CHECK(below.verdicts[1].lhs == Rat(400));
  CHECK(below.verdicts[1].rhs == Rat(-25, 4));
  CHECK(below.verdicts[1].diff_valuation == PadicVal::of(3));  // 1625/4

  // j = 4 > n: only the mod p^2 verdict applies.
  ClaimResult above = apery::verify_lem5(5, 4);
  CHECK(above.passed);
  REQUIRE(above.verdicts.size() == 1);
  CHECK(above.verdicts[0].lhs == Rat(61));
  CHECK(above.verdicts[0].rhs == Rat(187, 42));
  CHECK(above.verdicts[0].exponent == PadicVal::of(2));
  CHECK(above.verdicts[0].diff_valuation == PadicVal::of(3));  // 2375/42

  // Full j sweeps at several primes.
  for (std::int64_t p : {5, 7, 11, 13}) {
    for (std::int64_t j = 0; j <= p - 1; ++j) {
      CAPTURE(p);
      CAPTURE(j);
      CHECK(apery::verify_lem5(p, j).passed);
    }
  }
  CHECK_THROWS_AS(apery::verify_lem5(3, 0), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_lem5(5, 5), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_lem5(5, -1), apery::PreconditionError);
}

TEST_CASE("facp: frozen instances and the j = k = n specialization") {
  ClaimResult r = apery::verify_facp(5, 2, 2);
  CHECK(r.passed);
  REQUIRE(r.verdicts.size() == 2);  // j = k = n = 2 adds the specialization
  CHECK(r.verdicts[0].lhs == Rat(630));  // (3)_5 / (2! 2!)
  CHECK(r.verdicts[0].rhs == Rat(5));
  CHECK(r.verdicts[0].diff_valuation == PadicVal::of(4));  // 625 = 5^4
  CHECK(r.verdicts[1].lhs == Rat(630));
  CHECK(r.verdicts[1].rhs == Rat(5));

  ClaimResult r2 = apery::verify_facp(7, 1, 2);
  CHECK(r2.passed);
  REQUIRE(r2.verdicts.size() == 1);
  CHECK(r2.verdicts[0].lhs == Rat(1512));     // (6)_4 / (1! 2!)
  CHECK(r2.verdicts[0].rhs == Rat(-63, 2));   // -7 (1 + 7/2)
  CHECK(r2.verdicts[0].diff_valuation == PadicVal::of(3));  // 3087/2 = 7^3 9/2

  for (std::int64_t p : {5, 7, 11}) {
    std::int64_t n = (p - 1) / 2;
    for (std::int64_t j = 0; j <= p - 1; ++j)
      for (std::int64_t k = 0; k <= n; ++k) {
        CAPTURE(p);
        CAPTURE(j);
        CAPTURE(k);
        CHECK(apery::verify_facp(p, j, k).passed);
      }
  }
  CHECK_THROWS_AS(apery::verify_facp(3, 0, 0), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_facp(5, 5, 0), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_facp(5, 0, 3), apery::PreconditionError);
}

TEST_CASE("lem-rutkowski: exact identities") {
  ClaimResult r = apery::verify_rutkowski(1, 1);
  CHECK(r.passed);
  REQUIRE(r.verdicts.size() == 1);
  CHECK(r.verdicts[0].lhs == Rat(-1, 6));
  CHECK(r.verdicts[0].rhs == Rat(-1, 6));
  CHECK(r.verdicts[0].exponent.is_infinite());
  CHECK(r.verdicts[0].diff_valuation.is_infinite());

  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t j = 0; j <= n; ++j) {
      CAPTURE(n);
      CAPTURE(j);
      ClaimResult rr = apery::verify_rutkowski(n, j);
      CHECK(rr.passed);
      if (j < n) CHECK(rr.verdicts[0].lhs == Rat(0));
    }
  }
  CHECK(apery::verify_rutkowski(4, 4).verdicts[0].rhs ==
        Rat(1) / (Rat(9) * Rat(apery::binomial(8, 4))));
  CHECK_THROWS_AS(apery::verify_rutkowski(0, 0), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_rutkowski(3, 4), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_rutkowski(3, -1), apery::PreconditionError);
}

TEST_CASE("lem-morley: frozen p = 7 instance and a prime sweep") {
  ClaimResult r = apery::verify_morley(7);
  CHECK(r.passed);
  CHECK(r.verdicts[0].lhs == Rat(25, 256));  // binom(-1/2,3)^2
  CHECK(r.verdicts[0].rhs == Rat(-20));
  CHECK(r.verdicts[0].diff_valuation == PadicVal::of(3));  // 5145/256 = 3 5 7^3/256

  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43}) {
    CAPTURE(p);
    CHECK(apery::verify_morley(p).passed);
  }
  CHECK_THROWS_AS(apery::verify_morley(3), apery::PreconditionError);
}

TEST_CASE("lem7: frozen p = 5 values and a prime sweep") {
  ClaimResult r = apery::verify_lem7(5);
  CHECK(r.passed);
  REQUIRE(r.verdicts.size() == 2);
  CHECK(r.verdicts[0].lhs == Rat(375, 8192));
  CHECK(r.verdicts[0].rhs == Rat(0));
  CHECK(r.verdicts[0].diff_valuation == PadicVal::of(3));
  CHECK(r.verdicts[1].lhs == Rat(5, 4));  // 1 + 1/4
  CHECK(r.verdicts[1].exponent == PadicVal::of(1));
  CHECK(r.verdicts[1].diff_valuation == PadicVal::of(1));

  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    CAPTURE(p);
    CHECK(apery::verify_lem7(p).passed);
  }
  CHECK_THROWS_AS(apery::verify_lem7(3), apery::PreconditionError);
}

TEST_CASE("split-symmetry: double sum vanishes and the congruence splits") {
  for (std::int64_t p : {5, 7, 11, 13, 17}) {
    CAPTURE(p);
    ClaimResult r = apery::verify_split_symmetry(p);
    CHECK(r.passed);
    REQUIRE(r.verdicts.size() == 2);
    CHECK(r.verdicts[0].lhs == Rat(0));
    CHECK(r.verdicts[0].exponent.is_infinite());
    CHECK(r.verdicts[1].exponent == PadicVal::of(3));
  }
  CHECK_THROWS_AS(apery::verify_split_symmetry(3), apery::PreconditionError);
}

TEST_CASE("split-symmetry antisymmetry is term-by-term, not incidental") {
  // The (j,k) term equals the negated (k,j) term, which forces D = 0.
  for (std::int64_t p : {5, 7}) {
    std::int64_t n = (p - 1) / 2;
    for (std::int64_t j = 0; j <= n; ++j)
      for (std::int64_t k = 0; k <= n; ++k) {
        auto term = [&](std::int64_t a, std::int64_t b) {
          Rat c = Rat(apery::binomial(n, a) * apery::binomial(n + a, a)) *
              Rat(apery::binomial(n, b) * apery::binomial(n + b, b)) *
              (apery::harmonic(b) - apery::harmonic(a)) / Rat(a + b + 1);
          return ((a + b) % 2 != 0) ? -c : c;
        };
        CHECK(term(j, k) == -term(k, j));
      }
  }
}

TEST_CASE("lem2: exact summation identity including degenerate windows") {
  ClaimResult r = apery::verify_lem2(5, 2, 1);
  CHECK(r.passed);
  CHECK(r.verdicts[0].lhs == Rat(90));
  CHECK(r.verdicts[0].rhs == Rat(90));

  // m <= j: both sides vanish because the Pochhammer runs across zero.
  ClaimResult z = apery::verify_lem2(2, 5, 0);
  CHECK(z.passed);
  CHECK(z.verdicts[0].lhs == Rat(0));
  CHECK(z.verdicts[0].rhs == Rat(0));

  for (std::int64_t m = 1; m <= 8; ++m)
    for (std::int64_t j = 0; j <= 6; ++j)
      for (std::int64_t k = 0; k <= 6; ++k) {
        CAPTURE(m);
        CAPTURE(j);
        CAPTURE(k);
        CHECK(apery::verify_lem2(m, j, k).passed);
      }
  CHECK_THROWS_AS(apery::verify_lem2(0, 0, 0), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_lem2(3, -1, 0), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_lem2(3, 0, -1), apery::PreconditionError);
}

TEST_CASE("cor4: both integral routes agree exactly") {
  for (std::int64_t p : {3, 5, 7}) {
    for (std::int64_t m = 1; m <= 4; ++m)
      for (std::int64_t j = 0; j <= 5; ++j) {
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(j);
        ClaimResult r = apery::verify_cor4(m, j, p);
        CHECK(r.passed);
        CHECK(r.verdicts[0].exponent.is_infinite());
      }
  }
  CHECK_THROWS_AS(apery::verify_cor4(0, 0, 5), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_cor4(1, -1, 5), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_cor4(1, 0, 6), apery::PreconditionError);
}

TEST_CASE("eta-param: one verdict per coefficient through the order") {
  ClaimResult r = apery::verify_eta_param(8);
  CHECK(r.passed);
  CHECK(r.verdicts.size() == 9);
  CHECK(r.parameters.at("order") == 8);
  for (const auto& v : r.verdicts) CHECK(v.exponent.is_infinite());
  CHECK(r.verdicts[1].lhs == Rat(12));

  CHECK_THROWS_AS(apery::verify_eta_param(0), apery::PreconditionError);
  CHECK_THROWS_AS(apery::verify_eta_param(2001), apery::PreconditionError);
}

TEST_CASE("selftest fixtures manufacture honest failures") {
  ClaimResult ok = apery::verify_selftest(false, 1);
  CHECK(ok.passed);
  CHECK(ok.claim_id == "selftest-proven");

  ClaimResult bad = apery::verify_selftest(false, 0);
  CHECK_FALSE(bad.passed);
  CHECK(bad.verdicts[0].lhs == Rat(0));
  CHECK(bad.verdicts[0].rhs == Rat(1));
  CHECK_FALSE(bad.verdicts[0].holds);

  ClaimResult finding = apery::verify_selftest(true, 0);
  CHECK_FALSE(finding.passed);
  CHECK(finding.claim_id == "selftest-conjectural");
}

TEST_CASE("run_claim dispatch: parity with direct verifiers and error taxonomy") {
  CHECK(apery::run_claim("lem5", {{"p", 5}, {"j", 2}}) == apery::verify_lem5(5, 2));
  CHECK(apery::run_claim("thm-main2", {{"p", 3}}) == apery::verify_main2(3));
  CHECK(apery::run_claim("lem2", {{"m", 5}, {"j", 2}, {"k", 1}}) == apery::verify_lem2(5, 2, 1));

  // Defaults: eta-param order 30, selftest expect 1.
  ClaimResult eta_default = apery::run_claim("eta-param", {});
  CHECK(eta_default.parameters.at("order") == 30);
  CHECK(eta_default.passed);
  CHECK(apery::run_claim("selftest-proven", {}).passed);

  CHECK_THROWS_AS(apery::run_claim("no-such-claim", {{"p", 5}}), apery::UsageError);
  CHECK_THROWS_AS(apery::run_claim("lem5", {{"p", 5}}), apery::UsageError);
  CHECK_THROWS_AS(apery::run_claim("lem5", {{"p", 5}, {"j", 1}, {"n", 2}}), apery::UsageError);
  CHECK_THROWS_AS(apery::run_claim("thm-main2", {{"p", 9}}), apery::PreconditionError);
  CHECK_THROWS_AS(apery::run_claim("thm-main1", {{"p", 3}}), apery::PreconditionError);

  // Both error types remain invalid_argument for generic handling.
  CHECK_THROWS_AS(apery::run_claim("no-such-claim", {}), std::invalid_argument);
  CHECK_THROWS_AS(apery::run_claim("thm-main1", {{"p", 4}}), std::invalid_argument);
}
