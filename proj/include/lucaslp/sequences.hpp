#pragma once

/**
 * @file sequences.hpp
 * @brief Fibonacci, Lucas and general second-order recurrences.
 *
 * A LinearRecurrence (A0, A1, u, v) defines A(n) = u*A(n-1) + v*A(n-2).
 * Exact values are arbitrary precision. Modular values go through fast
 * doubling (Fibonacci/Lucas) or a 2x2 companion-matrix power, so indices
 * up to 2^64 - 1 are cheap.
 */

#include <cstdint>
#include <optional>

#include <gmpxx.h>

#include "lucaslp/modmath.hpp"

namespace lucaslp {

struct LinearRecurrence {
  std::int64_t A0 = 0;
  std::int64_t A1 = 1;
  std::int64_t u = 1;
  std::int64_t v = 1;

  static constexpr LinearRecurrence fibonacci() noexcept { return {0, 1, 1, 1}; }
  static constexpr LinearRecurrence lucas() noexcept { return {2, 1, 1, 1}; }
  static constexpr LinearRecurrence pell() noexcept { return {0, 1, 2, 1}; }

  /// v*A0^2 + u*A0*A1 - A1^2, the invariant factor of the Catalan-type identity.
  [[nodiscard]] mpz_class discriminant_factor() const;

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

struct PeriodInfo {
  std::uint64_t preperiod = 0;
  std::uint64_t period = 1;

  friend bool operator==(const PeriodInfo&, const PeriodInfo&) = default;
};

[[nodiscard]] mpz_class fib(std::uint64_t n);
[[nodiscard]] mpz_class lucas_num(std::uint64_t n);

[[nodiscard]] Residue fib_mod(std::uint64_t n, Prime p) noexcept;
[[nodiscard]] Residue lucas_mod(std::uint64_t n, Prime p) noexcept;

/// A(n) exactly, or reduced mod p when a modulus is given.
[[nodiscard]] mpz_class rec_term(const LinearRecurrence& rec, std::uint64_t n,
                                 std::optional<Prime> modulus = std::nullopt);
[[nodiscard]] Residue rec_term_mod(const LinearRecurrence& rec, std::uint64_t n, Prime p) noexcept;

/// s(k,u,v) = sum_{i<=k/2} C(k-i, i) u^(k-2i) v^i.
[[nodiscard]] mpz_class s_poly(std::uint64_t k, std::int64_t u, std::int64_t v);
/// t(k,u,v) = sum_{j<=(k-1)/2} C(k-1-j, j) u^(k-1-2j) v^(j+1); t(0,u,v) = 0.
[[nodiscard]] mpz_class t_poly(std::uint64_t k, std::int64_t u, std::int64_t v);
/// s(k,u,v) mod p, summed termwise with Lucas-theorem binomials.
[[nodiscard]] Residue s_poly_mod(std::uint64_t k, std::int64_t u, std::int64_t v, Prime p);

/// Scan limit that always suffices: one more step than there are state pairs.
[[nodiscard]] std::uint64_t default_scan_limit(Prime p) noexcept;

/// Minimal (preperiod, period) of the state pair (A(n), A(n+1)) mod p.
/// Throws ScanExhausted when no state repeats within `scan_limit` steps.
[[nodiscard]] PeriodInfo period_mod(const LinearRecurrence& rec, Prime p, std::uint64_t scan_limit);

/// Rank of apparition: least n >= 1 with p | F(n). Throws ScanExhausted past `scan_limit`.
[[nodiscard]] std::uint64_t alpha(Prime p, std::uint64_t scan_limit);

}  // namespace lucaslp
