#pragma once

/**
 * @file special.hpp
 * @brief Apery numbers and the coefficients omega(n) of 1 / J0(2 sqrt z).
 *
 * omega(n) is defined through sum_n omega(n) z^n / (n!)^2 = 1 / J0(2 sqrt z).
 * Multiplying out against J0(2 sqrt z) = sum_k (-1)^k z^k / (k!)^2 gives the
 * integer convolution
 *
 *   sum_{k=0}^{n} (-1)^k C(n,k)^2 omega(n-k) = [n == 0],
 *
 * which is what both the exact and the modular evaluators use.
 */

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "lucaslp/modmath.hpp"

namespace lucaslp {

/// A(n) = sum_k C(n,k)^2 C(n+k,k)^2.
[[nodiscard]] mpz_class apery(std::uint64_t n);
/// A(n) mod p, termwise through Lucas-theorem binomials.
[[nodiscard]] Residue apery_mod(std::uint64_t n, Prime p);
/// apery_mod(n, p) for n in [0, count).
[[nodiscard]] std::vector<Residue> apery_mod_prefix(std::uint64_t count, Prime p);

[[nodiscard]] mpz_class omega(std::uint64_t n);
[[nodiscard]] Residue omega_mod(std::uint64_t n, Prime p);
/// omega(0..count-1) exactly.
[[nodiscard]] std::vector<mpz_class> omega_prefix(std::uint64_t count);
/// omega(0..count-1) mod p, run entirely in residues.
[[nodiscard]] std::vector<Residue> omega_mod_prefix(std::uint64_t count, Prime p);

}  // namespace lucaslp
