#include <numeric>
#include <random>

#include "doctest.h"
#include "lucaslp/sequences.hpp"
#include "oracles.hpp"

using namespace lucaslp;

namespace {

std::vector<Prime> primes_upto(std::uint64_t hi) { return primes_between(2, hi); }

// State-pair scan that tries every (preperiod, period) in increasing order.
PeriodInfo naive_period(const LinearRecurrence& rec, std::uint64_t p) {
  const auto seq = oracle::iterate(rec.A0, rec.A1, rec.u, rec.v, 4 * p * p + 8);
  std::vector<std::uint64_t> m;
  for (const auto& x : seq) m.push_back(oracle::mod(x, p));
  for (std::uint64_t pre = 0;; ++pre) {
    for (std::uint64_t per = 1; per <= p * p; ++per) {
      bool ok = true;
      for (std::uint64_t n = pre; n + per + 1 < m.size() && ok; ++n) ok = m[n] == m[n + per];
      if (ok) return {pre, per};
    }
  }
}

}  // namespace

TEST_CASE("fib and lucas_num exact") {
  CHECK(fib(0) == 0);
  CHECK(fib(1) == 1);
  CHECK(lucas_num(0) == 2);
  CHECK(lucas_num(1) == 1);
  CHECK(fib(10) == 55);
  CHECK(lucas_num(10) == 123);
  const auto f = oracle::fibs(2001);
  const auto l = oracle::lucas(2001);
  for (std::uint64_t n = 0; n <= 2000; ++n) {
    REQUIRE(fib(n) == f[n]);
    REQUIRE(lucas_num(n) == l[n]);
  }
}

TEST_CASE("fib_mod and lucas_mod examples") {
  CHECK(fib_mod(10, Prime(5)) == 0);
  CHECK(fib_mod(0, Prime(11)) == 0);
  CHECK(lucas_mod(7, Prime(3)) == 2);
}

TEST_CASE("fast modular paths agree with exact values") {
  const auto f = oracle::fibs(2001);
  const auto l = oracle::lucas(2001);
  const auto pell = oracle::iterate(0, 1, 2, 1, 2001);
  const auto odd = oracle::iterate(-3, 7, -2, 5, 2001);
  for (const auto& p : primes_upto(101)) {
    const auto q = p.value();
    for (std::uint64_t n = 0; n <= 2000; ++n) {
      REQUIRE(fib_mod(n, p) == oracle::mod(f[n], q));
      REQUIRE(lucas_mod(n, p) == oracle::mod(l[n], q));
      REQUIRE(rec_term_mod(LinearRecurrence::pell(), n, p) == oracle::mod(pell[n], q));
      REQUIRE(rec_term_mod({-3, 7, -2, 5}, n, p) == oracle::mod(odd[n], q));
    }
  }
}

TEST_CASE("fast paths handle huge indices and moduli") {
  const Prime big(18446744073709551557ULL);
  // F(2^64-1) mod p via two independent fast routes.
  const std::uint64_t n = UINT64_MAX;
  CHECK(fib_mod(n, big) == rec_term_mod(LinearRecurrence::fibonacci(), n, big));
  CHECK(lucas_mod(n, big) == rec_term_mod(LinearRecurrence::lucas(), n, big));
  // Period of F mod 5 is 20.
  CHECK(fib_mod(20ULL * 922337203685477580ULL, Prime(5)) == 0);
  CHECK(fib_mod(20ULL * 922337203685477580ULL + 1, Prime(5)) == 1);
}

TEST_CASE("rec_term") {
  CHECK(rec_term(LinearRecurrence::fibonacci(), 10) == 55);
  CHECK(rec_term({-4, 9, 3, 3}, 0) == -4);
  CHECK(rec_term({-4, 9, 3, 3}, 1) == 9);
  CHECK(rec_term(LinearRecurrence::pell(), 5) == 29);
  CHECK(rec_term(LinearRecurrence::fibonacci(), 10, Prime(7)) == 6);
  const auto seq = oracle::iterate(5, -2, -3, 7, 300);
  for (std::uint64_t n = 0; n < 300; ++n) REQUIRE(rec_term({5, -2, -3, 7}, n) == seq[n]);
}

TEST_CASE("s_poly and t_poly examples") {
  CHECK(s_poly(0, 7, -3) == 1);
  CHECK(s_poly(4, 1, 1) == 5);
  CHECK(s_poly(3, 2, 1) == 12);
  CHECK(t_poly(0, 7, -3) == 0);
  CHECK(t_poly(1, 7, -3) == -3);
  CHECK(t_poly(4, 1, 1) == 3);
}

TEST_CASE("s_poly bridges to Fibonacci and Pell") {
  const auto f = oracle::fibs(302);
  const auto pell = oracle::iterate(0, 1, 2, 1, 302);
  for (std::uint64_t k = 0; k <= 300; ++k) {
    REQUIRE(s_poly(k, 1, 1) == f[k + 1]);
    REQUIRE(s_poly(k, 2, 1) == pell[k + 1]);
  }
}

TEST_CASE("t(k) = v s(k-1) on random (u, v)") {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<std::int64_t> coef(-10, 10);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t u = coef(rng);
    const std::int64_t v = coef(rng);
    for (std::uint64_t k = 1; k <= 100; ++k) REQUIRE(t_poly(k, u, v) == v * s_poly(k - 1, u, v));
  }
}

TEST_CASE("s_poly_mod agrees with the exact sum") {
  for (const auto& p : primes_upto(31)) {
    for (std::int64_t u = -4; u <= 4; ++u) {
      for (std::int64_t v = -4; v <= 4; ++v) {
        for (std::uint64_t k = 0; k < 40; ++k) {
          REQUIRE(s_poly_mod(k, u, v, p) == reduce(s_poly(k, u, v), p));
        }
      }
    }
  }
}

TEST_CASE("gcd(F_m, F_n) = F_gcd(m, n)") {
  const auto f = oracle::fibs(121);
  for (std::uint64_t m = 0; m <= 120; ++m) {
    for (std::uint64_t n = 0; n <= 120; ++n) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), f[m].get_mpz_t(), f[n].get_mpz_t());
      REQUIRE(g == fib(std::gcd(m, n)));
    }
  }
}

TEST_CASE("period_mod examples") {
  CHECK(period_mod(LinearRecurrence::fibonacci(), Prime(5), default_scan_limit(Prime(5))) == PeriodInfo{0, 20});
  CHECK(period_mod(LinearRecurrence::fibonacci(), Prime(2), default_scan_limit(Prime(2))) == PeriodInfo{0, 3});
  // v = 0 makes the step non-invertible; exact values come from the scan.
  CHECK(period_mod({1, 1, 1, 0}, Prime(5), 100) == naive_period({1, 1, 1, 0}, 5));
  // v = 5 = 0 mod 5: A(n) = 2^(n-1) for n >= 1, so A(0) = 0 is never revisited.
  CHECK(period_mod({0, 1, 2, 5}, Prime(5), 100) == PeriodInfo{1, 4});
  CHECK(naive_period({0, 1, 2, 5}, 5) == PeriodInfo{1, 4});
}

TEST_CASE("period_mod is minimal and agrees with a direct scan") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> coef(-6, 6);
  for (const auto& p : primes_upto(23)) {
    for (int trial = 0; trial < 12; ++trial) {
      const LinearRecurrence rec{coef(rng), coef(rng), coef(rng), coef(rng)};
      const auto info = period_mod(rec, p, default_scan_limit(p));
      const auto q = p.value();
      REQUIRE(info == naive_period(rec, q));
      if (rec.v % static_cast<std::int64_t>(q) != 0) REQUIRE(info.preperiod == 0);
      // The state repeats with the period and with no proper divisor of it.
      auto state_at = [&](std::uint64_t n) {
        return std::pair{rec_term_mod(rec, n, p), rec_term_mod(rec, n + 1, p)};
      };
      for (std::uint64_t n = info.preperiod; n < info.preperiod + 3 * info.period; ++n) {
        REQUIRE(state_at(n) == state_at(n + info.period));
      }
      for (std::uint64_t d = 1; d < info.period; ++d) {
        if (info.period % d != 0) continue;
        bool all = true;
        for (std::uint64_t n = info.preperiod; n < info.preperiod + info.period && all; ++n) {
          all = state_at(n) == state_at(n + d);
        }
        REQUIRE_FALSE(all);
      }
    }
  }
}

TEST_CASE("period_mod runs out of scan budget") {
  CHECK_THROWS_AS((void)period_mod(LinearRecurrence::fibonacci(), Prime(5), 10), ScanExhausted);
  CHECK_NOTHROW((void)period_mod(LinearRecurrence::fibonacci(), Prime(5), 20));
}

TEST_CASE("period_mod on a large prime uses the sparse table") {
  const Prime p(10007);
  const auto info = period_mod(LinearRecurrence::fibonacci(), p, default_scan_limit(p));
  CHECK(info.preperiod == 0);
  CHECK(fib_mod(info.period, p) == 0);
  CHECK(fib_mod(info.period + 1, p) == 1);
}

TEST_CASE("alpha") {
  CHECK(alpha(Prime(5), 100) == 5);
  CHECK(alpha(Prime(2), 100) == 3);
  CHECK(alpha(Prime(7), 100) == 8);
  CHECK_THROWS_AS((void)alpha(Prime(7), 7), ScanExhausted);
}

TEST_CASE("alpha divides exactly the Fibonacci zeros") {
  for (const auto& p : primes_upto(100)) {
    const auto rank = alpha(p, default_scan_limit(p));
    for (std::uint64_t a = 1; a <= 5 * rank; ++a) {
      REQUIRE((fib_mod(a, p) == 0) == (a % rank == 0));
    }
  }
}
