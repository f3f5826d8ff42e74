#include "lucaslp/special.hpp"

namespace lucaslp {

mpz_class apery(std::uint64_t n) {
  mpz_class total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const mpz_class term = binomial_exact(n, k) * binomial_exact(n + k, k);
    total += term * term;
  }
  return total;
}

Residue apery_mod(std::uint64_t n, Prime p) {
  Residue total = 0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const Residue term = mul_mod(binomial_mod_lucas(n, k, p), binomial_mod_lucas(n + k, k, p), p);
    total = add_mod(total, mul_mod(term, term, p), p);
  }
  return total;
}

std::vector<Residue> apery_mod_prefix(std::uint64_t count, Prime p) {
  std::vector<Residue> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) out.push_back(apery_mod(n, p));
  return out;
}

std::vector<mpz_class> omega_prefix(std::uint64_t count) {
  std::vector<mpz_class> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    if (n == 0) {
      out.emplace_back(1);
      continue;
    }
    mpz_class total = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      const mpz_class c = binomial_exact(n, k);
      const mpz_class term = c * c * out[n - k];
      if (k & 1U) {
        total += term;
      } else {
        total -= term;
      }
    }
    out.push_back(std::move(total));
  }
  return out;
}

std::vector<Residue> omega_mod_prefix(std::uint64_t count, Prime p) {
  std::vector<Residue> out;
  out.reserve(count);
  for (std::uint64_t n = 0; n < count; ++n) {
    if (n == 0) {
      out.push_back(1 % p.value());
      continue;
    }
    Residue total = 0;
    for (std::uint64_t k = 1; k <= n; ++k) {
      const Residue c = binomial_mod_lucas(n, k, p);
      const Residue term = mul_mod(mul_mod(c, c, p), out[n - k], p);
      total = (k & 1U) ? add_mod(total, term, p) : sub_mod(total, term, p);
    }
    out.push_back(total);
  }
  return out;
}

mpz_class omega(std::uint64_t n) { return omega_prefix(n + 1).back(); }

Residue omega_mod(std::uint64_t n, Prime p) { return omega_mod_prefix(n + 1, p).back(); }

}  // namespace lucaslp
