#pragma once

/**
 * @file identities.hpp
 * @brief Exact residuals (LHS - RHS) of the Catalan-type and shift identities.
 *
 * Every function returns zero when its identity holds at the given indices.
 * A nonzero return is the exact discrepancy.
 */

#include <cstdint>

#include <gmpxx.h>

#include "lucaslp/sequences.hpp"

namespace lucaslp {

/// F(n)^2 - F(n+r)F(n-r) - (-1)^(n-r) F(r)^2. Requires r <= n.
[[nodiscard]] mpz_class catalan_residual(std::uint64_t n, std::uint64_t r);

/// L(n+r)L(n-r) - L(n)^2 - (-1)^(n-r) 5 F(r)^2. Requires r <= n.
[[nodiscard]] mpz_class lucas_catalan_residual(std::uint64_t n, std::uint64_t r);

/// A(n+r)A(n-r) - A(n)^2 - (-v)^(n-r) s(r-1,u,v)^2 (v A0^2 + u A0 A1 - A1^2).
/// Requires 1 <= r <= n.
[[nodiscard]] mpz_class general_catalan_residual(const LinearRecurrence& rec, std::uint64_t n,
                                                 std::uint64_t r);

/// A(n+r) - s(k,u,v) A(n+r-k) - t(k,u,v) A(n+r-k-1). Requires n + r >= k + 1.
[[nodiscard]] mpz_class shift_identity_residual(const LinearRecurrence& rec, std::uint64_t n,
                                                std::uint64_t r, std::uint64_t k);

}  // namespace lucaslp
