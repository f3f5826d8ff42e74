#include "lucaslp/identities.hpp"

#include <string>

namespace lucaslp {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw IndexOrder(what);
}

// (-1)^e
int sign_pow(std::uint64_t e) noexcept { return (e & 1U) ? -1 : 1; }

}  // namespace

mpz_class catalan_residual(std::uint64_t n, std::uint64_t r) {
  require(r <= n, "catalan_residual requires r <= n");
  const mpz_class fn = fib(n);
  const mpz_class fr = fib(r);
  return fn * fn - fib(n + r) * fib(n - r) - sign_pow(n - r) * fr * fr;
}

mpz_class lucas_catalan_residual(std::uint64_t n, std::uint64_t r) {
  require(r <= n, "lucas_catalan_residual requires r <= n");
  const mpz_class ln = lucas_num(n);
  const mpz_class fr = fib(r);
  return lucas_num(n + r) * lucas_num(n - r) - ln * ln - sign_pow(n - r) * 5 * fr * fr;
}

mpz_class general_catalan_residual(const LinearRecurrence& rec, std::uint64_t n, std::uint64_t r) {
  require(r >= 1 && r <= n, "general_catalan_residual requires 1 <= r <= n");
  const mpz_class an = rec_term(rec, n);
  const mpz_class s = s_poly(r - 1, rec.u, rec.v);
  const mpz_class rhs = sign_pow(n - r) * ipow(rec.v, n - r) * s * s * rec.discriminant_factor();
  return rec_term(rec, n + r) * rec_term(rec, n - r) - an * an - rhs;
}

mpz_class shift_identity_residual(const LinearRecurrence& rec, std::uint64_t n, std::uint64_t r,
                                  std::uint64_t k) {
  require(n + r >= k + 1, "shift_identity_residual requires n + r >= k + 1");
  const std::uint64_t top = n + r;
  return rec_term(rec, top) - s_poly(k, rec.u, rec.v) * rec_term(rec, top - k) -
         t_poly(k, rec.u, rec.v) * rec_term(rec, top - k - 1);
}

}  // namespace lucaslp
