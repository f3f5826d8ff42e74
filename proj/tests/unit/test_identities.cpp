#include <random>

#include "doctest.h"
#include "lucaslp/identities.hpp"
#include "oracles.hpp"

using namespace lucaslp;

namespace {

std::vector<LinearRecurrence> recurrence_set() {
  std::vector<LinearRecurrence> out{LinearRecurrence::fibonacci(), LinearRecurrence::lucas(),
                                    LinearRecurrence::pell()};
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<std::int64_t> coef(-5, 5);
  for (int i = 0; i < 20; ++i) out.push_back({coef(rng), coef(rng), coef(rng), coef(rng)});
  return out;
}

}  // namespace

TEST_CASE("catalan_residual") {
  CHECK(catalan_residual(5, 2) == 0);
  CHECK(catalan_residual(9, 0) == 0);
  CHECK(catalan_residual(12, 7) == 0);
  CHECK_THROWS_AS((void)catalan_residual(3, 4), IndexOrder);
  for (std::uint64_t n = 0; n <= 200; ++n) {
    for (std::uint64_t r = 0; r <= n; ++r) REQUIRE(catalan_residual(n, r) == 0);
  }
}

TEST_CASE("lucas_catalan_residual") {
  CHECK(lucas_catalan_residual(3, 1) == 0);
  CHECK(lucas_catalan_residual(6, 0) == 0);
  CHECK(lucas_catalan_residual(10, 4) == 0);
  CHECK_THROWS_AS((void)lucas_catalan_residual(0, 1), IndexOrder);
  for (std::uint64_t n = 0; n <= 200; ++n) {
    for (std::uint64_t r = 0; r <= n; ++r) REQUIRE(lucas_catalan_residual(n, r) == 0);
  }
}

TEST_CASE("general_catalan_residual examples") {
  // With A = F the general identity is the Catalan identity with both sides negated.
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t r = 1; r <= n; ++r) {
      REQUIRE(general_catalan_residual(LinearRecurrence::fibonacci(), n, r) == 0);
    }
  }
  CHECK(LinearRecurrence::lucas().discriminant_factor() == 5);
  CHECK(general_catalan_residual(LinearRecurrence::lucas(), 3, 1) == 0);
  CHECK(general_catalan_residual(LinearRecurrence::pell(), 6, 2) == 0);
  CHECK_THROWS_AS((void)general_catalan_residual(LinearRecurrence::pell(), 4, 0), IndexOrder);
  CHECK_THROWS_AS((void)general_catalan_residual(LinearRecurrence::pell(), 4, 5), IndexOrder);
}

TEST_CASE("general_catalan_residual over the recurrence set") {
  for (const auto& rec : recurrence_set()) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      for (std::uint64_t r = 1; r <= n; ++r) REQUIRE(general_catalan_residual(rec, n, r) == 0);
    }
  }
}

TEST_CASE("Lucas-number specialisation agrees on the overlap") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t r = 1; r <= n; ++r) {
      REQUIRE(general_catalan_residual(LinearRecurrence::lucas(), n, r) == 0);
      REQUIRE(lucas_catalan_residual(n, r) == 0);
    }
  }
}

TEST_CASE("shift_identity_residual") {
  CHECK(shift_identity_residual(LinearRecurrence::fibonacci(), 8, 0, 3) == 0);
  CHECK(s_poly(3, 1, 1) * fib(5) + t_poly(3, 1, 1) * fib(4) == 21);
  CHECK(shift_identity_residual({4, -1, 3, -2}, 2, 1, 1) == 0);
  CHECK(shift_identity_residual({4, -1, 3, -2}, 1, 0, 0) == 0);
  CHECK_THROWS_AS((void)shift_identity_residual(LinearRecurrence::pell(), 2, 1, 3), IndexOrder);
  for (const auto& rec : recurrence_set()) {
    for (std::uint64_t top = 2; top <= 60; ++top) {
      for (std::uint64_t k = 1; k < top; ++k) {
        const std::uint64_t r = top / 3;
        REQUIRE(shift_identity_residual(rec, top - r, r, k) == 0);
      }
    }
  }
}
