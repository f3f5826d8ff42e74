#include "lucaslp/lp.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "companion.hpp"
#include "lucaslp/special.hpp"
#include "parallel.hpp"

namespace lucaslp {

namespace {

constexpr std::uint64_t max_scan_count = std::uint64_t{1} << 30U;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t checked_power(Prime p, unsigned digit_bound) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < digit_bound; ++i) {
    if (count > max_scan_count / p.value()) {
      throw std::invalid_argument("search space p^digit_bound exceeds 2^30 indices");
    }
    count *= p.value();
  }
  return count;
}

// Successive residues of X(a n + b) for a second-order recurrence X.
class AffineStream {
 public:
  AffineStream(const LinearRecurrence& rec, AffineIndexMap map, Prime p)
      : p_(p),
        step_(detail::power(detail::companion(rec, p), map.a(), p)),
        state_(detail::apply(detail::power(detail::companion(rec, p), map.b(), p),
                             detail::initial_state(rec, p), p)) {}

  Residue operator()() noexcept {
    const Residue out = state_.cur;
    state_ = detail::apply(step_, state_, p_);
    return out;
  }

 private:
  Prime p_;
  detail::ModMat2 step_;
  detail::ModState state_;
};

// Yields S(0), S(1), ... mod p; `count` bounds how far a table-backed
// source must be materialised.
std::function<Residue()> residue_source(const SequenceSpec& spec, Prime p, std::uint64_t count) {
  auto from_table = [](std::vector<Residue> values) -> std::function<Residue()> {
    return [values = std::move(values), i = std::size_t{0}]() mutable { return values[i++]; };
  };
  return std::visit(
      overloaded{
          [&](const FibAffine& s) -> std::function<Residue()> {
            return AffineStream(LinearRecurrence::fibonacci(), s.map, p);
          },
          [&](const LucasAffine& s) -> std::function<Residue()> {
            return AffineStream(LinearRecurrence::lucas(), s.map, p);
          },
          [&](const GeneralAffine& s) -> std::function<Residue()> {
            return AffineStream(s.rec, s.map, p);
          },
          [&](const PowerSeq& s) -> std::function<Residue()> {
            return [p, base = reduce(s.base, p), acc = Residue{1 % p.value()}]() mutable {
              const Residue out = acc;
              acc = mul_mod(acc, base, p);
              return out;
            };
          },
          [&](const AperySeq&) { return from_table(apery_mod_prefix(count, p)); },
          [&](const OmegaSeq&) { return from_table(omega_mod_prefix(count, p)); },
          [&](const TableSeq& s) {
            if (s.values.size() < count) {
              throw TableTooShort("table has " + std::to_string(s.values.size()) +
                                  " entries but " + std::to_string(count) + " are required");
            }
            std::vector<Residue> values;
            values.reserve(count);
            for (std::uint64_t i = 0; i < count; ++i) values.push_back(reduce(s.values[i], p));
            return from_table(std::move(values));
          },
      },
      spec.variant());
}

std::string affine_label(const char* name, AffineIndexMap m) {
  std::ostringstream os;
  os << name << "(" << m.a() << "n+" << m.b() << ")";
  return os.str();
}

}  // namespace

AffineIndexMap::AffineIndexMap(std::uint64_t a, std::uint64_t b) : a_(a), b_(b) {
  if (a == 0) throw std::invalid_argument("affine index map needs a >= 1");
}

SequenceSpec::SequenceSpec(Variant v) : v_(std::move(v)) {
  if (const auto* t = std::get_if<TableSeq>(&v_); t != nullptr && t->values.empty()) {
    throw std::invalid_argument("table sequence must be non-empty");
  }
}

std::string SequenceSpec::describe() const {
  return std::visit(overloaded{
                        [](const FibAffine& s) { return affine_label("F", s.map); },
                        [](const LucasAffine& s) { return affine_label("L", s.map); },
                        [](const GeneralAffine& s) {
                          std::ostringstream os;
                          os << affine_label("A", s.map) << " with (A0,A1,u,v)=(" << s.rec.A0 << ","
                             << s.rec.A1 << "," << s.rec.u << "," << s.rec.v << ")";
                          return os.str();
                        },
                        [](const PowerSeq& s) { return std::to_string(s.base) + "^n"; },
                        [](const AperySeq&) { return std::string("apery(n)"); },
                        [](const OmegaSeq&) { return std::string("omega(n)"); },
                        [](const TableSeq& s) {
                          return "table[" + std::to_string(s.values.size()) + "]";
                        },
                    },
                    v_);
}

std::vector<Residue> sequence_residues(const SequenceSpec& spec, Prime p, std::uint64_t count) {
  auto next = residue_source(spec, p, count);
  std::vector<Residue> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(next());
  return out;
}

LPScan lp_scan(const SequenceSpec& spec, Prime p, unsigned digit_bound) {
  if (digit_bound < 2) throw std::invalid_argument("digit_bound must be at least 2");
  const std::uint64_t count = checked_power(p, digit_bound);
  const std::uint64_t kept = count / p.value();
  auto next = residue_source(spec, p, count);

  // product[m] = S(m_0) S(m_1) ... for m < p^(digit_bound - 1); single digits
  // are their own product.
  std::vector<Residue> product(kept);
  LPScan out{LPVerdict{true, p, digit_bound, std::nullopt}, true};
  for (std::uint64_t n = 0; n < count; ++n) {
    const Residue lhs = next();
    if (lhs != 0) out.identically_zero = false;
    Residue rhs = lhs;
    if (n >= p.value()) {
      rhs = mul_mod(product[n % p.value()], product[n / p.value()], p);
      if (rhs != lhs) {
        out.verdict.holds = false;
        out.verdict.counterexample = Counterexample{n, lhs, digits_base_p(n, p).digits, rhs};
        out.identically_zero = false;
        return out;
      }
    }
    if (n < kept) product[n] = rhs;
  }
  return out;
}

LPVerdict lp_bruteforce(const SequenceSpec& spec, Prime p, unsigned digit_bound) {
  return lp_scan(spec, p, digit_bound).verdict;
}

LemmaOutcome lemma1_check(const SequenceSpec& spec, Prime p, std::uint64_t scan) {
  const auto values = sequence_residues(spec, p, std::max<std::uint64_t>(scan, 1));
  if (std::all_of(values.begin(), values.end(), [](Residue r) { return r == 0; })) {
    return LemmaOutcome::inapplicable;
  }
  return values.front() == 1 % p.value() ? LemmaOutcome::holds : LemmaOutcome::fails;
}

bool lemma2_check(const SequenceSpec& spec, Prime p, std::uint64_t n_bound) {
  const auto values = sequence_residues(spec, p, std::max<std::uint64_t>(n_bound, 2));
  Residue power = 1 % p.value();
  for (std::uint64_t n = 0; n < n_bound; ++n) {
    if (values[n] != power) return false;
    power = mul_mod(power, values[1], p);
  }
  return true;
}

bool theorem1_condition(AffineIndexMap map, Prime p) {
  return fib_mod(map.a(), p) == 0 && fib_mod(map.b(), p) == 1 % p.value();
}

bool theorem2_condition(AffineIndexMap map, Prime p, Reading reading) {
  const bool first = mul_mod(5 % p.value(), fib_mod(map.a(), p), p) == 0;
  const Residue at_b = reading == Reading::as_proved ? lucas_mod(map.b(), p) : fib_mod(map.b(), p);
  return first && at_b == 1 % p.value();
}

bool theorem3_condition(const LinearRecurrence& rec, AffineIndexMap map, Prime p) {
  // s(a-1,u,v) is term a of the (0, 1, u, v) recurrence, so it is
  // evaluated by matrix power instead of the O(a) binomial sum.
  const Residue s = rec_term_mod(LinearRecurrence{0, 1, rec.u, rec.v}, map.a(), p);
  const Residue factor = reduce(rec.discriminant_factor(), p);
  const bool first = mul_mod(mul_mod(reduce(rec.v, p), s, p), factor, p) == 0;
  return first && rec_term_mod(rec, map.b(), p) == 1 % p.value();
}

LinearRecurrence SequenceFamily::recurrence() const noexcept {
  switch (kind) {
    case FamilyKind::fibonacci:
      return LinearRecurrence::fibonacci();
    case FamilyKind::lucas:
      return LinearRecurrence::lucas();
    case FamilyKind::general:
      break;
  }
  return rec;
}

SequenceSpec SequenceFamily::at(AffineIndexMap map) const {
  switch (kind) {
    case FamilyKind::fibonacci:
      return SequenceSpec::fib_affine(map);
    case FamilyKind::lucas:
      return SequenceSpec::lucas_affine(map);
    case FamilyKind::general:
      break;
  }
  return SequenceSpec::general_affine(rec, map);
}

bool SequenceFamily::predicts_lp(AffineIndexMap map, Prime p, Reading reading) const {
  switch (kind) {
    case FamilyKind::fibonacci:
      return theorem1_condition(map, p);
    case FamilyKind::lucas:
      return theorem2_condition(map, p, reading);
    case FamilyKind::general:
      break;
  }
  return theorem3_condition(rec, map, p);
}

std::vector<std::uint64_t> ValidBReport::residues() const {
  std::vector<std::uint64_t> out;
  for (const auto& c : candidates) {
    if (c.oracle && !c.identically_zero) out.push_back(c.b);
  }
  return out;
}

std::vector<std::uint64_t> ValidBReport::predicted_residues() const {
  std::vector<std::uint64_t> out;
  for (const auto& c : candidates) {
    if (c.predicted) out.push_back(c.b);
  }
  return out;
}

std::vector<std::uint64_t> ValidBReport::identically_zero_residues() const {
  std::vector<std::uint64_t> out;
  for (const auto& c : candidates) {
    if (c.identically_zero) out.push_back(c.b);
  }
  return out;
}

std::size_t ValidBReport::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(candidates.begin(), candidates.end(), [](const BCandidate& c) { return c.disagrees(); }));
}

ValidBReport enumerate_valid_b(const SequenceFamily& family, std::uint64_t a, Prime p,
                               unsigned digit_bound, Reading reading, unsigned threads) {
  const PeriodInfo period = period_mod(family.recurrence(), p, default_scan_limit(p));
  ValidBReport report{family, a, p, period, digit_bound, reading, {}};
  report.candidates.resize(period.preperiod + period.period);
  detail::parallel_for(report.candidates.size(), threads, [&](std::size_t b) {
    const AffineIndexMap map(a, b);
    const LPScan scan = lp_scan(family.at(map), p, digit_bound);
    report.candidates[b] =
        BCandidate{b, scan.verdict.holds, family.predicts_lp(map, p, reading), scan.identically_zero};
  });
  return report;
}

std::size_t Agreement::disagreements() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const GridCell& c) { return c.disagrees(); }));
}

std::size_t Agreement::flagged() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const GridCell& c) { return c.identically_zero; }));
}

std::vector<GridCell> Agreement::disagreement_list() const {
  std::vector<GridCell> out;
  std::copy_if(cells.begin(), cells.end(), std::back_inserter(out),
               [](const GridCell& c) { return c.disagrees(); });
  return out;
}

Agreement cross_validate(const SequenceFamily& family, const GridSpec& grid, Reading reading,
                         unsigned threads) {
  if (grid.a_min == 0) throw std::invalid_argument("grid a range must start at 1 or above");
  std::vector<GridCell> cells;
  for (const Prime& p : grid.primes) {
    for (std::uint64_t a = grid.a_min; a <= grid.a_max; ++a) {
      for (std::uint64_t b = grid.b_min; b <= grid.b_max; ++b) {
        cells.push_back(GridCell{p, AffineIndexMap(a, b), false, false, false, std::nullopt});
      }
    }
  }
  detail::parallel_for(cells.size(), threads, [&](std::size_t i) {
    GridCell& cell = cells[i];
    const LPScan scan = lp_scan(family.at(cell.map), cell.prime, grid.digit_bound);
    cell.oracle = scan.verdict.holds;
    cell.identically_zero = scan.identically_zero;
    cell.witness = scan.verdict.counterexample;
    cell.predicted = family.predicts_lp(cell.map, cell.prime, reading);
  });
  return Agreement{std::move(cells)};
}

std::pair<Prime, LPVerdict> corollary1_counterexample(AffineIndexMap map, std::uint64_t prime_bound,
                                                      FamilyKind family, unsigned digit_bound) {
  if (family == FamilyKind::general) {
    throw std::invalid_argument("counterexample search covers the Fibonacci and Lucas families");
  }
  const SequenceSpec spec = family == FamilyKind::fibonacci ? SequenceSpec::fib_affine(map)
                                                            : SequenceSpec::lucas_affine(map);
  for (const Prime& p : primes_between(2, prime_bound)) {
    LPVerdict verdict = lp_bruteforce(spec, p, digit_bound);
    if (!verdict.holds) return {p, std::move(verdict)};
  }
  throw NotFoundWithinBound(spec.describe() + " passes the oracle at every prime <= " +
                            std::to_string(prime_bound));
}

Residue lemma3_closed_form(FamilyKind kind, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("closed form needs n >= 1");
  const Prime five(5);
  const Residue power = pow_mod(3, n - 1, five);
  switch (kind) {
    case FamilyKind::fibonacci:
      return mul_mod(n % 5, power, five);
    case FamilyKind::lucas:
      return power;
    case FamilyKind::general:
      break;
  }
  throw std::invalid_argument("closed form exists only for Fibonacci and Lucas numbers");
}

}  // namespace lucaslp
