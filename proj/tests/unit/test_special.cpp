#include "doctest.h"
#include "lucaslp/lp.hpp"
#include "lucaslp/special.hpp"
#include "oracles.hpp"

using namespace lucaslp;

TEST_CASE("apery examples") {
  CHECK(apery(0) == 1);
  CHECK(apery(1) == 5);
  CHECK(apery(2) == 73);
  mpz_class direct = 0;
  for (std::uint64_t k = 0; k <= 10; ++k) {
    direct += oracle::binomial(10, k) * oracle::binomial(10, k) * oracle::binomial(10 + k, k) *
              oracle::binomial(10 + k, k);
  }
  CHECK(apery(10) == direct);
}

TEST_CASE("apery_mod agrees with the exact value") {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    const Prime p(q);
    const auto prefix = apery_mod_prefix(201, p);
    for (std::uint64_t n = 0; n <= 200; ++n) {
      const auto exact = oracle::mod(apery(n), q);
      REQUIRE(apery_mod(n, p) == exact);
      REQUIRE(prefix[n] == exact);
    }
  }
}

TEST_CASE("omega examples") {
  CHECK(omega(0) == 1);
  CHECK(omega(1) == 1);
  CHECK(omega(2) == 3);
  CHECK(omega(3) == 19);
}

TEST_CASE("omega satisfies its defining convolution") {
  const auto w = omega_prefix(41);
  for (std::uint64_t n = 0; n <= 40; ++n) {
    mpz_class total = 0;
    for (std::uint64_t k = 0; k <= n; ++k) {
      const mpz_class c = oracle::binomial(n, k);
      total += ((k & 1U) ? -1 : 1) * c * c * w[n - k];
    }
    REQUIRE(total == (n == 0 ? 1 : 0));
  }
}

TEST_CASE("omega matches rational series inversion") {
  REQUIRE(oracle::omega_series_is_integral(26));
  const auto expected = oracle::omega_by_series_inversion(26);
  const auto got = omega_prefix(26);
  for (std::size_t n = 0; n < 26; ++n) REQUIRE(got[n] == expected[n]);
}

TEST_CASE("omega_mod agrees with the exact value") {
  const auto w = omega_prefix(150);
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    const Prime p(q);
    const auto prefix = omega_mod_prefix(150, p);
    for (std::uint64_t n = 0; n < 150; ++n) REQUIRE(prefix[n] == oracle::mod(w[n], q));
    CHECK(omega_mod(37, p) == oracle::mod(w[37], q));
  }
}

TEST_CASE("Apery and omega are LP at small primes") {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    CHECK(lp_bruteforce(SequenceSpec::apery(), Prime(q), 2).holds);
  }
  for (std::uint64_t q : {2, 3, 5}) CHECK(lp_bruteforce(SequenceSpec::apery(), Prime(q), 3).holds);
  for (std::uint64_t q : {2, 3, 5, 7, 11}) CHECK(lp_bruteforce(SequenceSpec::omega(), Prime(q), 2).holds);
}
