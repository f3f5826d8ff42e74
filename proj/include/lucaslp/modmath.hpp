#pragma once

/**
 * @file modmath.hpp
 * @brief Exact and modular integer primitives over a prime modulus.
 *
 * Residues are always kept in [0, p). Products of two residues are formed
 * in 128-bit arithmetic, so any prime below 2^64 is a valid modulus.
 */

#include <compare>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "lucaslp/errors.hpp"

namespace lucaslp {

using Residue = std::uint64_t;

/// Deterministic primality test, exact for every 64-bit input.
[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// A validated prime modulus.
class Prime {
 public:
  /// Throws NotPrime unless `value` is prime.
  explicit Prime(std::uint64_t value);

  [[nodiscard]] std::uint64_t value() const noexcept { return value_; }

  friend auto operator<=>(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

/// All primes p with lo <= p <= hi, ascending.
[[nodiscard]] std::vector<Prime> primes_between(std::uint64_t lo, std::uint64_t hi);

/// Little-endian base-p digits: digits[0] is the units digit.
struct DigitExpansion {
  Prime base;
  std::vector<std::uint64_t> digits;

  /// Sum of digits[i] * base^i. Throws std::overflow_error past 64 bits.
  [[nodiscard]] std::uint64_t value() const;
};

/// Canonical expansion; n = 0 yields the single digit [0].
[[nodiscard]] DigitExpansion digits_base_p(std::uint64_t n, Prime p);

// Residue arithmetic. Arguments must already lie in [0, p).
[[nodiscard]] Residue add_mod(Residue x, Residue y, Prime p) noexcept;
[[nodiscard]] Residue sub_mod(Residue x, Residue y, Prime p) noexcept;
[[nodiscard]] Residue mul_mod(Residue x, Residue y, Prime p) noexcept;

/// Floor reduction into [0, p), also for negative x.
[[nodiscard]] Residue reduce(std::int64_t x, Prime p) noexcept;
[[nodiscard]] Residue reduce(const mpz_class& x, Prime p);

/// base^exp mod p by square-and-multiply; 0^0 = 1.
[[nodiscard]] Residue pow_mod(std::int64_t base, std::uint64_t exp, Prime p) noexcept;

/// x with a*x = 1 (mod p). Throws NonInvertible when p divides a.
[[nodiscard]] Residue inverse_mod(std::int64_t a, Prime p);

/// Exact C(n, k); zero when k > n.
[[nodiscard]] mpz_class binomial_exact(std::uint64_t n, std::uint64_t k);

/// C(n, m) mod p as the product of digitwise binomials C(n_i, m_i).
/// The shorter expansion is padded with zero digits.
[[nodiscard]] Residue binomial_mod_lucas(std::uint64_t n, std::uint64_t m, Prime p);

/// Exact integer power with a signed base.
[[nodiscard]] mpz_class ipow(std::int64_t base, std::uint64_t exp);

}  // namespace lucaslp
