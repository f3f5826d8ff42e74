#include "lucaslp/modmath.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace lucaslp {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_raw(std::uint64_t x, std::uint64_t y, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(x) * y % m);
}

std::uint64_t powmod_raw(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1U) result = mulmod_raw(result, base, m);
    base = mulmod_raw(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// Miller-Rabin with the first twelve primes as witnesses; exact below 3.3e24.
bool miller_rabin(std::uint64_t n) noexcept {
  constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : witnesses) {
    std::uint64_t x = powmod_raw(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod_raw(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// C(n, k) mod p for single digits n, k < p.
Residue digit_binomial(std::uint64_t n, std::uint64_t k, Prime p) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Residue num = 1;
  Residue den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = mul_mod(num, (n - i) % p.value(), p);
    den = mul_mod(den, (i + 1) % p.value(), p);
  }
  return mul_mod(num, inverse_mod(static_cast<std::int64_t>(den), p), p);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  return miller_rabin(n);
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (!is_prime(value)) throw NotPrime(std::to_string(value) + " is not prime");
}

std::vector<Prime> primes_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<Prime> out;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
    if (is_prime(n)) out.emplace_back(n);
    if (n == std::numeric_limits<std::uint64_t>::max()) break;
  }
  return out;
}

std::uint64_t DigitExpansion::value() const {
  u128 total = 0;
  u128 scale = 1;
  constexpr u128 limit = std::numeric_limits<std::uint64_t>::max();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != 0) {
      if (scale > limit) throw std::overflow_error("digit expansion exceeds 64 bits");
      total += scale * digits[i];
      if (total > limit) throw std::overflow_error("digit expansion exceeds 64 bits");
    }
    if (i + 1 < digits.size() && scale <= limit) scale *= base.value();
  }
  return static_cast<std::uint64_t>(total);
}

DigitExpansion digits_base_p(std::uint64_t n, Prime p) {
  DigitExpansion out{p, {}};
  do {
    out.digits.push_back(n % p.value());
    n /= p.value();
  } while (n != 0);
  return out;
}

Residue add_mod(Residue x, Residue y, Prime p) noexcept {
  const std::uint64_t m = p.value();
  return x >= m - y ? x - (m - y) : x + y;
}

Residue sub_mod(Residue x, Residue y, Prime p) noexcept {
  return x >= y ? x - y : p.value() - (y - x);
}

Residue mul_mod(Residue x, Residue y, Prime p) noexcept { return mulmod_raw(x, y, p.value()); }

Residue reduce(std::int64_t x, Prime p) noexcept {
  const std::uint64_t m = p.value();
  if (x >= 0) return static_cast<std::uint64_t>(x) % m;
  // |x| computed without overflowing at INT64_MIN.
  const std::uint64_t r = (static_cast<std::uint64_t>(-(x + 1)) + 1) % m;
  return r == 0 ? 0 : m - r;
}

Residue reduce(const mpz_class& x, Prime p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "GMP ui functions must take 64-bit operands");
  return mpz_fdiv_ui(x.get_mpz_t(), p.value());
}

Residue pow_mod(std::int64_t base, std::uint64_t exp, Prime p) noexcept {
  return powmod_raw(reduce(base, p), exp, p.value());
}

Residue inverse_mod(std::int64_t a, Prime p) {
  const Residue r = reduce(a, p);
  if (r == 0) {
    throw NonInvertible(std::to_string(a) + " is not invertible modulo " + std::to_string(p.value()));
  }
  return powmod_raw(r, p.value() - 2, p.value());
}

mpz_class binomial_exact(std::uint64_t n, std::uint64_t k) {
  mpz_class out;
  if (k > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Residue binomial_mod_lucas(std::uint64_t n, std::uint64_t m, Prime p) {
  Residue acc = 1 % p.value();
  while (n != 0 || m != 0) {
    const std::uint64_t nd = n % p.value();
    const std::uint64_t md = m % p.value();
    if (md > nd) return 0;
    acc = mul_mod(acc, digit_binomial(nd, md, p), p);
    n /= p.value();
    m /= p.value();
  }
  return acc;
}

mpz_class ipow(std::int64_t base, std::uint64_t exp) {
  mpz_class b(static_cast<long>(base));
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

}  // namespace lucaslp
