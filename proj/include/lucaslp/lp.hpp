#pragma once

/**
 * @file lp.hpp
 * @brief Lucas-property oracle, theorem predictions and their cross-checks.
 *
 * A sequence S has the Lucas property with the prime p when
 *
 *   S(n) = S(n_0) S(n_1) ... S(n_r)  (mod p)
 *
 * for every n with base-p digits n_0, ..., n_r. lp_bruteforce() tests this
 * literally over all n < p^digit_bound. The *_condition() functions are the
 * closed-form predictions for affine-indexed Fibonacci, Lucas and general
 * second-order sequences; cross_validate() and enumerate_valid_b() compare
 * the two.
 *
 * A sequence that is identically zero mod p satisfies the congruence
 * vacuously. The oracle reports such sequences as holding; every comparison
 * against a prediction flags them separately and leaves them out of the
 * disagreement count, since the predictions assume S is not identically zero.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "lucaslp/modmath.hpp"
#include "lucaslp/sequences.hpp"

namespace lucaslp {

/// n -> a*n + b with a >= 1.
class AffineIndexMap {
 public:
  /// Throws std::invalid_argument when a == 0.
  AffineIndexMap(std::uint64_t a, std::uint64_t b);

  [[nodiscard]] std::uint64_t a() const noexcept { return a_; }
  [[nodiscard]] std::uint64_t b() const noexcept { return b_; }
  [[nodiscard]] std::uint64_t operator()(std::uint64_t n) const noexcept { return a_ * n + b_; }

  friend bool operator==(const AffineIndexMap&, const AffineIndexMap&) = default;

 private:
  std::uint64_t a_;
  std::uint64_t b_;
};

struct FibAffine {
  AffineIndexMap map;
};
struct LucasAffine {
  AffineIndexMap map;
};
struct GeneralAffine {
  LinearRecurrence rec;
  AffineIndexMap map;
};
struct PowerSeq {
  std::int64_t base;
};
struct AperySeq {};
struct OmegaSeq {};
struct TableSeq {
  std::vector<mpz_class> values;
};

/// The integer sequence S(n) under test.
class SequenceSpec {
 public:
  using Variant =
      std::variant<FibAffine, LucasAffine, GeneralAffine, PowerSeq, AperySeq, OmegaSeq, TableSeq>;

  /// Throws std::invalid_argument for an empty table.
  SequenceSpec(Variant v);

  static SequenceSpec fib_affine(AffineIndexMap m) { return {FibAffine{m}}; }
  static SequenceSpec lucas_affine(AffineIndexMap m) { return {LucasAffine{m}}; }
  static SequenceSpec general_affine(const LinearRecurrence& rec, AffineIndexMap m) {
    return {GeneralAffine{rec, m}};
  }
  static SequenceSpec power(std::int64_t base) { return {PowerSeq{base}}; }
  static SequenceSpec apery() { return {AperySeq{}}; }
  static SequenceSpec omega() { return {OmegaSeq{}}; }
  static SequenceSpec table(std::vector<mpz_class> values) { return {TableSeq{std::move(values)}}; }

  [[nodiscard]] const Variant& variant() const noexcept { return v_; }

  /// Short human-readable label, e.g. "F(5n+1)".
  [[nodiscard]] std::string describe() const;

 private:
  Variant v_;
};

/// S(0), ..., S(count-1) mod p. Throws TableTooShort for an undersized table.
[[nodiscard]] std::vector<Residue> sequence_residues(const SequenceSpec& spec, Prime p,
                                                     std::uint64_t count);

struct Counterexample {
  std::uint64_t n = 0;
  Residue lhs = 0;                   // S(n) mod p
  std::vector<std::uint64_t> digits; // base-p digits of n, little-endian
  Residue rhs = 0;                   // product of S(digit) mod p

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct LPVerdict {
  bool holds = true;
  Prime prime;
  unsigned digit_bound = 3;
  std::optional<Counterexample> counterexample;  // smallest violating n
};

struct LPScan {
  LPVerdict verdict;
  bool identically_zero = false;  // S(n) = 0 mod p on the whole scanned range
};

/// Checks the digit congruence for every n < p^digit_bound.
/// digit_bound must be at least 2 and p^digit_bound at most 2^30.
[[nodiscard]] LPScan lp_scan(const SequenceSpec& spec, Prime p, unsigned digit_bound = 3);
[[nodiscard]] LPVerdict lp_bruteforce(const SequenceSpec& spec, Prime p, unsigned digit_bound = 3);

enum class LemmaOutcome { holds, fails, inapplicable };

/// S(0) = 1 (mod p); inapplicable when S vanishes mod p on [0, scan).
[[nodiscard]] LemmaOutcome lemma1_check(const SequenceSpec& spec, Prime p, std::uint64_t scan);

/// S(n) = S(1)^n (mod p) for all n < n_bound.
[[nodiscard]] bool lemma2_check(const SequenceSpec& spec, Prime p, std::uint64_t n_bound);

/// Which congruence on b the Lucas-number prediction uses. The theorem as
/// printed asks for F(b) = 1; its proof derives L(b) = 1.
enum class Reading { as_proved, as_stated };

/// F(a) = 0 and F(b) = 1 (mod p).
[[nodiscard]] bool theorem1_condition(AffineIndexMap map, Prime p);
/// 5 F(a) = 0 and L(b) = 1 (as proved) or F(b) = 1 (as stated), mod p.
[[nodiscard]] bool theorem2_condition(AffineIndexMap map, Prime p,
                                      Reading reading = Reading::as_proved);
/// v s(a-1,u,v) (v A0^2 + u A0 A1 - A1^2) = 0 and A(b) = 1 (mod p).
[[nodiscard]] bool theorem3_condition(const LinearRecurrence& rec, AffineIndexMap map, Prime p);

enum class FamilyKind { fibonacci, lucas, general };

/// A family of affine-indexed sequences S(n) = X(a n + b) sharing one recurrence X.
struct SequenceFamily {
  FamilyKind kind = FamilyKind::fibonacci;
  LinearRecurrence rec = LinearRecurrence::fibonacci();  // only read for `general`

  static SequenceFamily fibonacci() { return {FamilyKind::fibonacci, LinearRecurrence::fibonacci()}; }
  static SequenceFamily lucas() { return {FamilyKind::lucas, LinearRecurrence::lucas()}; }
  static SequenceFamily general(const LinearRecurrence& r) { return {FamilyKind::general, r}; }

  [[nodiscard]] LinearRecurrence recurrence() const noexcept;
  [[nodiscard]] SequenceSpec at(AffineIndexMap map) const;
  /// The theorem's prediction: 1 for Fibonacci, 2 for Lucas, 3 for general.
  [[nodiscard]] bool predicts_lp(AffineIndexMap map, Prime p,
                                 Reading reading = Reading::as_proved) const;
};

struct BCandidate {
  std::uint64_t b = 0;
  bool oracle = false;
  bool predicted = false;
  bool identically_zero = false;

  [[nodiscard]] bool disagrees() const noexcept { return !identically_zero && oracle != predicted; }
};

struct ValidBReport {
  SequenceFamily family;
  std::uint64_t a = 1;
  Prime prime;
  PeriodInfo period;
  unsigned digit_bound = 3;
  Reading reading = Reading::as_proved;
  std::vector<BCandidate> candidates;  // b = 0 .. preperiod + period - 1

  /// b where the oracle holds and S is not identically zero.
  [[nodiscard]] std::vector<std::uint64_t> residues() const;
  [[nodiscard]] std::vector<std::uint64_t> predicted_residues() const;
  [[nodiscard]] std::vector<std::uint64_t> identically_zero_residues() const;
  [[nodiscard]] std::size_t disagreements() const;
};

/// Every b modulo the sequence period for which X(a n + b) passes the oracle,
/// next to the theorem's prediction for the same b.
[[nodiscard]] ValidBReport enumerate_valid_b(const SequenceFamily& family, std::uint64_t a, Prime p,
                                             unsigned digit_bound = 3,
                                             Reading reading = Reading::as_proved,
                                             unsigned threads = 0);

struct GridSpec {
  std::vector<Prime> primes;
  std::uint64_t a_min = 1;
  std::uint64_t a_max = 1;
  std::uint64_t b_min = 0;
  std::uint64_t b_max = 0;
  unsigned digit_bound = 3;
};

struct GridCell {
  Prime prime;
  AffineIndexMap map;
  bool predicted = false;
  bool oracle = false;
  bool identically_zero = false;
  std::optional<Counterexample> witness;

  [[nodiscard]] bool disagrees() const noexcept { return !identically_zero && oracle != predicted; }
};

struct Agreement {
  std::vector<GridCell> cells;  // ordered by (p, a, b)

  [[nodiscard]] std::size_t disagreements() const;
  [[nodiscard]] std::size_t flagged() const;
  [[nodiscard]] std::vector<GridCell> disagreement_list() const;
};

/// Oracle against prediction on every (p, a, b) of the grid. Cells are
/// evaluated in parallel; the result is independent of the thread count.
[[nodiscard]] Agreement cross_validate(const SequenceFamily& family, const GridSpec& grid,
                                       Reading reading = Reading::as_proved, unsigned threads = 0);

/// Smallest prime p <= prime_bound at which X(a n + b) fails the oracle.
/// Throws NotFoundWithinBound when every prime passes.
[[nodiscard]] std::pair<Prime, LPVerdict> corollary1_counterexample(
    AffineIndexMap map, std::uint64_t prime_bound, FamilyKind family = FamilyKind::fibonacci,
    unsigned digit_bound = 3);

/// n 3^(n-1) mod 5 for Fibonacci, 3^(n-1) mod 5 for Lucas; n >= 1.
[[nodiscard]] Residue lemma3_closed_form(FamilyKind kind, std::uint64_t n);

}  // namespace lucaslp
