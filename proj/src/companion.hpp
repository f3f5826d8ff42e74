#pragma once

// 2x2 companion-matrix arithmetic mod p, shared by the sequence evaluators
// and the LP scanners.

#include <cstdint>

#include "lucaslp/modmath.hpp"
#include "lucaslp/sequences.hpp"

namespace lucaslp::detail {

struct ModMat2 {
  Residue m00, m01, m10, m11;
};

struct ModState {
  Residue cur;   // A(n)
  Residue next;  // A(n+1)
};

inline ModMat2 mul(const ModMat2& x, const ModMat2& y, Prime p) noexcept {
  return {add_mod(mul_mod(x.m00, y.m00, p), mul_mod(x.m01, y.m10, p), p),
          add_mod(mul_mod(x.m00, y.m01, p), mul_mod(x.m01, y.m11, p), p),
          add_mod(mul_mod(x.m10, y.m00, p), mul_mod(x.m11, y.m10, p), p),
          add_mod(mul_mod(x.m10, y.m01, p), mul_mod(x.m11, y.m11, p), p)};
}

inline ModState apply(const ModMat2& m, ModState s, Prime p) noexcept {
  return {add_mod(mul_mod(m.m00, s.cur, p), mul_mod(m.m01, s.next, p), p),
          add_mod(mul_mod(m.m10, s.cur, p), mul_mod(m.m11, s.next, p), p)};
}

/// Maps (A(n), A(n+1)) to (A(n+1), A(n+2)).
inline ModMat2 companion(const LinearRecurrence& rec, Prime p) noexcept {
  return {0, 1 % p.value(), reduce(rec.v, p), reduce(rec.u, p)};
}

inline ModMat2 power(ModMat2 base, std::uint64_t exp, Prime p) noexcept {
  const Residue one = 1 % p.value();
  ModMat2 result{one, 0, 0, one};
  while (exp != 0) {
    if (exp & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

inline ModState initial_state(const LinearRecurrence& rec, Prime p) noexcept {
  return {reduce(rec.A0, p), reduce(rec.A1, p)};
}

}  // namespace lucaslp::detail
