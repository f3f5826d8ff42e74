#include "doctest.h"
#include "lucaslp/modmath.hpp"
#include "oracles.hpp"

using namespace lucaslp;

TEST_CASE("is_prime small values") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(91));
  for (std::uint64_t n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == oracle::is_prime(n));
}

TEST_CASE("is_prime 64-bit edge cases") {
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK(is_prime(1000000007ULL));
}

TEST_CASE("Prime rejects composites") {
  CHECK_THROWS_AS(Prime(1), NotPrime);
  CHECK_THROWS_AS(Prime(15), NotPrime);
  CHECK(Prime(13).value() == 13);
}

TEST_CASE("digits_base_p examples") {
  const Prime five(5);
  CHECK(digits_base_p(0, five).digits == std::vector<std::uint64_t>{0});
  CHECK(digits_base_p(12, five).digits == std::vector<std::uint64_t>{2, 2});
  CHECK(digits_base_p(38, five).digits == std::vector<std::uint64_t>{3, 2, 1});
}

TEST_CASE("digits_base_p round trip and canonical form") {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    const Prime p(q);
    for (std::uint64_t n = 0; n < 1000000; ++n) {
      const auto e = digits_base_p(n, p);
      REQUIRE(e.value() == n);
      REQUIRE((e.digits.back() != 0 || e.digits.size() == 1));
      for (auto d : e.digits) REQUIRE(d < q);
    }
  }
  const Prime big(18446744073709551557ULL);
  CHECK(digits_base_p(18446744073709551615ULL, big).value() == 18446744073709551615ULL);
}

TEST_CASE("reduce floors negatives") {
  const Prime seven(7);
  CHECK(reduce(-1, seven) == 6);
  CHECK(reduce(-14, seven) == 0);
  CHECK(reduce(INT64_MIN, seven) == oracle::mod(mpz_class("-9223372036854775808"), 7));
  CHECK(reduce(mpz_class(-15), seven) == 6);
}

TEST_CASE("pow_mod examples") {
  CHECK(pow_mod(3, 4, Prime(5)) == 1);
  CHECK(pow_mod(2, 10, Prime(7)) == 2);
  CHECK(pow_mod(0, 0, Prime(7)) == 1);
  CHECK(pow_mod(9, 0, Prime(3)) == 1);
}

TEST_CASE("pow_mod matches repeated multiplication") {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    const Prime p(q);
    for (std::int64_t a = 0; a < 30; ++a) {
      std::uint64_t naive = 1 % q;
      for (std::uint64_t e = 0; e < 30; ++e) {
        REQUIRE(pow_mod(a, e, p) == naive);
        naive = naive * static_cast<std::uint64_t>(a) % q;
      }
    }
  }
  CHECK(pow_mod(-2, 3, Prime(7)) == 6);
}

TEST_CASE("inverse_mod") {
  CHECK(inverse_mod(3, Prime(7)) == 5);
  CHECK(inverse_mod(1, Prime(101)) == 1);
  CHECK_THROWS_AS((void)inverse_mod(5, Prime(5)), NonInvertible);
  CHECK_THROWS_AS((void)inverse_mod(0, Prime(2)), NonInvertible);
  for (std::uint64_t q = 2; q <= 101; ++q) {
    if (!oracle::is_prime(q)) continue;
    const Prime p(q);
    for (std::uint64_t a = 1; a < q; ++a) {
      REQUIRE(a * inverse_mod(static_cast<std::int64_t>(a), p) % q == 1);
    }
  }
}

TEST_CASE("binomial_exact") {
  CHECK(binomial_exact(5, 2) == 10);
  CHECK(binomial_exact(17, 0) == 1);
  CHECK(binomial_exact(3, 5) == 0);
  for (std::uint64_t n = 0; n < 60; ++n) {
    for (std::uint64_t k = 0; k <= n + 2; ++k) REQUIRE(binomial_exact(n, k) == oracle::binomial(n, k));
  }
}

TEST_CASE("binomial_mod_lucas examples") {
  CHECK(binomial_mod_lucas(5, 2, Prime(3)) == 1);
  CHECK(binomial_mod_lucas(6, 3, Prime(2)) == 0);
  CHECK(binomial_mod_lucas(123456, 0, Prime(7)) == 1);
  CHECK(binomial_mod_lucas(3, 5, Prime(7)) == 0);
}

TEST_CASE("Lucas theorem agrees with exact binomials") {
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13}) {
    const Prime p(q);
    for (std::uint64_t n = 0; n <= 400; ++n) {
      for (std::uint64_t m = 0; m <= 400; ++m) {
        REQUIRE(binomial_mod_lucas(n, m, p) == oracle::mod(oracle::binomial(n, m), q));
      }
    }
  }
}

TEST_CASE("primes_between") {
  std::vector<std::uint64_t> got;
  for (const auto& p : primes_between(0, 31)) got.push_back(p.value());
  CHECK(got == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31});
}
