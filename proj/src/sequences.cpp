#include "lucaslp/sequences.hpp"

#include <limits>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "companion.hpp"

namespace lucaslp {

namespace {

// (F(n), F(n+1)) exactly, by fast doubling from the top bit down.
std::pair<mpz_class, mpz_class> fib_pair(std::uint64_t n) {
  mpz_class f = 0;
  mpz_class g = 1;
  for (int bit = 63; bit >= 0; --bit) {
    mpz_class f2 = f * (2 * g - f);
    mpz_class g2 = f * f + g * g;
    if ((n >> bit) & 1U) {
      f = g2;
      g = f2 + g2;
    } else {
      f = std::move(f2);
      g = std::move(g2);
    }
  }
  return {f, g};
}

std::pair<Residue, Residue> fib_pair_mod(std::uint64_t n, Prime p) noexcept {
  Residue f = 0;
  Residue g = 1 % p.value();
  for (int bit = 63; bit >= 0; --bit) {
    const Residue two_g = add_mod(g, g, p);
    const Residue f2 = mul_mod(f, sub_mod(two_g, f, p), p);
    const Residue g2 = add_mod(mul_mod(f, f, p), mul_mod(g, g, p), p);
    if ((n >> bit) & 1U) {
      f = g2;
      g = add_mod(f2, g2, p);
    } else {
      f = f2;
      g = g2;
    }
  }
  return {f, g};
}

struct ExactMat2 {
  mpz_class m00, m01, m10, m11;
};

ExactMat2 mul(const ExactMat2& x, const ExactMat2& y) {
  return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
          x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

mpz_class to_mpz(std::int64_t x) { return mpz_class(static_cast<long>(x)); }

}  // namespace

mpz_class LinearRecurrence::discriminant_factor() const {
  const mpz_class a0 = to_mpz(A0);
  const mpz_class a1 = to_mpz(A1);
  return to_mpz(v) * a0 * a0 + to_mpz(u) * a0 * a1 - a1 * a1;
}

mpz_class fib(std::uint64_t n) { return fib_pair(n).first; }

mpz_class lucas_num(std::uint64_t n) {
  auto [f, g] = fib_pair(n);
  return 2 * g - f;
}

Residue fib_mod(std::uint64_t n, Prime p) noexcept { return fib_pair_mod(n, p).first; }

Residue lucas_mod(std::uint64_t n, Prime p) noexcept {
  auto [f, g] = fib_pair_mod(n, p);
  return sub_mod(add_mod(g, g, p), f, p);
}

mpz_class rec_term(const LinearRecurrence& rec, std::uint64_t n, std::optional<Prime> modulus) {
  if (modulus) return mpz_class(static_cast<unsigned long>(rec_term_mod(rec, n, *modulus)));
  ExactMat2 base{0, 1, to_mpz(rec.v), to_mpz(rec.u)};
  ExactMat2 acc{1, 0, 0, 1};
  for (std::uint64_t e = n; e != 0; e >>= 1U) {
    if (e & 1U) acc = mul(acc, base);
    if (e > 1) base = mul(base, base);
  }
  return acc.m00 * to_mpz(rec.A0) + acc.m01 * to_mpz(rec.A1);
}

Residue rec_term_mod(const LinearRecurrence& rec, std::uint64_t n, Prime p) noexcept {
  const auto m = detail::power(detail::companion(rec, p), n, p);
  return detail::apply(m, detail::initial_state(rec, p), p).cur;
}

namespace {

// sum over i of C(m - i, i) u^(m - 2i) v^i
mpz_class binomial_power_sum(std::uint64_t m, std::int64_t u, std::int64_t v) {
  const std::uint64_t top = m / 2;
  std::vector<mpz_class> vpow(top + 1);
  vpow[0] = 1;
  for (std::uint64_t i = 1; i <= top; ++i) vpow[i] = vpow[i - 1] * v;
  // Walk i downward so the power of u only ever grows.
  mpz_class upow = (m % 2 == 0) ? mpz_class(1) : mpz_class(static_cast<long>(u));
  const mpz_class u2 = mpz_class(static_cast<long>(u)) * u;
  mpz_class total = 0;
  for (std::uint64_t i = top + 1; i-- > 0;) {
    total += binomial_exact(m - i, i) * upow * vpow[i];
    upow *= u2;
  }
  return total;
}

}  // namespace

mpz_class s_poly(std::uint64_t k, std::int64_t u, std::int64_t v) { return binomial_power_sum(k, u, v); }

mpz_class t_poly(std::uint64_t k, std::int64_t u, std::int64_t v) {
  if (k == 0) return 0;
  return binomial_power_sum(k - 1, u, v) * v;
}

Residue s_poly_mod(std::uint64_t k, std::int64_t u, std::int64_t v, Prime p) {
  Residue total = 0;
  for (std::uint64_t i = 0; 2 * i <= k; ++i) {
    const Residue term = mul_mod(binomial_mod_lucas(k - i, i, p),
                                 mul_mod(pow_mod(u, k - 2 * i, p), pow_mod(v, i, p), p), p);
    total = add_mod(total, term, p);
  }
  return total;
}

std::uint64_t default_scan_limit(Prime p) noexcept {
  const unsigned __int128 sq = static_cast<unsigned __int128>(p.value()) * p.value() + 1;
  constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
  return sq > cap ? cap : static_cast<std::uint64_t>(sq);
}

PeriodInfo period_mod(const LinearRecurrence& rec, Prime p, std::uint64_t scan_limit) {
  const auto step = detail::companion(rec, p);
  auto state = detail::initial_state(rec, p);
  constexpr std::uint64_t dense_limit = 4096;
  constexpr std::uint64_t unseen = std::numeric_limits<std::uint64_t>::max();

  // First occurrence of each state pair; dense table for small p.
  std::vector<std::uint64_t> dense;
  std::unordered_map<unsigned __int128, std::uint64_t> sparse;
  const bool use_dense = p.value() <= dense_limit;
  if (use_dense) dense.assign(p.value() * p.value(), unseen);

  for (std::uint64_t i = 0;; ++i) {
    if (use_dense) {
      auto& slot = dense[state.cur * p.value() + state.next];
      if (slot != unseen) return {slot, i - slot};
      slot = i;
    } else {
      const unsigned __int128 key = (static_cast<unsigned __int128>(state.cur) << 64U) | state.next;
      auto [it, inserted] = sparse.try_emplace(key, i);
      if (!inserted) return {it->second, i - it->second};
    }
    if (i == scan_limit) break;
    state = detail::apply(step, state, p);
  }
  throw ScanExhausted("no repeated state within " + std::to_string(scan_limit) + " steps modulo " +
                      std::to_string(p.value()));
}

std::uint64_t alpha(Prime p, std::uint64_t scan_limit) {
  Residue f = 0;
  Residue g = 1 % p.value();
  for (std::uint64_t n = 1; n <= scan_limit; ++n) {
    const Residue h = add_mod(f, g, p);
    f = g;
    g = h;
    if (f == 0) return n;
  }
  throw ScanExhausted("no Fibonacci zero modulo " + std::to_string(p.value()) + " within " +
                      std::to_string(scan_limit) + " terms");
}

}  // namespace lucaslp
