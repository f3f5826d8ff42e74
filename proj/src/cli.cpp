#include "lucaslp/cli.hpp"

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lucaslp/identities.hpp"
#include "lucaslp/lp.hpp"
#include "lucaslp/report.hpp"
#include "lucaslp/special.hpp"

namespace lucaslp {

using nlohmann::json;

namespace {

std::string rec_text(const LinearRecurrence& r) {
  std::ostringstream os;
  os << r.A0 << "," << r.A1 << "," << r.u << "," << r.v;
  return os.str();
}

const std::vector<LinearRecurrence>& theorem3_default_set() {
  static const std::vector<LinearRecurrence> set{
      LinearRecurrence::fibonacci(), LinearRecurrence::lucas(), LinearRecurrence::pell(),
      LinearRecurrence{1, 2, 1, 1}, LinearRecurrence{2, 1, 3, 2}};
  return set;
}

Reading parse_reading(const std::string& s) {
  return s == "as-stated" ? Reading::as_stated : Reading::as_proved;
}

SequenceFamily parse_family(const std::string& name, const std::optional<std::string>& rec) {
  if (name == "fib") return SequenceFamily::fibonacci();
  if (name == "lucas") return SequenceFamily::lucas();
  if (!rec) throw std::invalid_argument("--family general needs --rec A0,A1,u,v");
  return SequenceFamily::general(parse_recurrence(*rec));
}

SequenceFamily family_for_theorem(int which, const LinearRecurrence& rec) {
  switch (which) {
    case 1:
      return SequenceFamily::fibonacci();
    case 2:
      return SequenceFamily::lucas();
    default:
      return SequenceFamily::general(rec);
  }
}

json cell_json(const GridCell& c) {
  return json{{"p", c.prime.value()},         {"a", c.map.a()},          {"b", c.map.b()},
              {"predicted", c.predicted},     {"oracle", c.oracle},      {"identically_zero", c.identically_zero}};
}

// ---- subcommand option blocks -------------------------------------------

struct LpCheckOptions {
  std::string spec;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::optional<std::string> rec;
  std::int64_t base = 2;
  std::vector<std::string> table;
  std::uint64_t prime = 0;
  unsigned digits = 3;
};

struct TheoremOptions {
  int which = 1;
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t prime = 0;
  std::optional<std::string> rec;
  std::string reading = "as-proved";
  unsigned digits = 3;
};

struct EnumerateOptions {
  std::string family = "fib";
  std::uint64_t a = 1;
  std::uint64_t prime = 0;
  std::optional<std::string> rec;
  std::string reading = "as-proved";
  unsigned digits = 3;
};

struct ScanOptions {
  std::uint64_t prime = 0;
  std::optional<std::uint64_t> scan_limit;
  std::optional<std::string> rec;
};

struct IdentityOptions {
  std::string which = "catalan";
  std::uint64_t n_max = 60;
  std::optional<std::string> rec;
};

struct SpecialOptions {
  std::string seq = "apery";
  std::uint64_t n = 0;
  std::optional<std::uint64_t> prime;
};

struct CrossvalOptions {
  int which = 1;
  std::string reading = "as-proved";
  std::vector<std::string> recs;
  std::uint64_t prime_max = 13;
  std::uint64_t a_min = 1;
  std::uint64_t a_max = 12;
  std::uint64_t b_min = 0;
  std::uint64_t b_max = 12;
  unsigned digits = 3;
};

struct CounterexampleOptions {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::string family = "fib";
  std::uint64_t prime_bound = 50;
  unsigned digits = 3;
};

// ---- subcommand bodies ----------------------------------------------------

SequenceSpec make_spec(const LpCheckOptions& o) {
  if (o.spec == "fib-affine") return SequenceSpec::fib_affine({o.a, o.b});
  if (o.spec == "lucas-affine") return SequenceSpec::lucas_affine({o.a, o.b});
  if (o.spec == "general-affine") {
    if (!o.rec) throw std::invalid_argument("general-affine needs --rec A0,A1,u,v");
    return SequenceSpec::general_affine(parse_recurrence(*o.rec), {o.a, o.b});
  }
  if (o.spec == "power") return SequenceSpec::power(o.base);
  if (o.spec == "apery") return SequenceSpec::apery();
  if (o.spec == "omega") return SequenceSpec::omega();
  std::vector<mpz_class> values;
  for (const auto& t : o.table) {
    mpz_class v;
    if (v.set_str(t, 10) != 0) throw std::invalid_argument("table entry '" + t + "' is not an integer");
    values.push_back(v);
  }
  return SequenceSpec::table(std::move(values));
}

Report run_lp_check(const LpCheckOptions& o) {
  const SequenceSpec spec = make_spec(o);
  const Prime p(o.prime);
  Report r{"lp-check", {{"spec", o.spec}, {"sequence", spec.describe()}, {"prime", std::to_string(o.prime)},
                        {"digits", std::to_string(o.digits)}}};
  const LPVerdict v = lp_bruteforce(spec, p, o.digits);
  r.verdicts.push_back(to_json(v));
  r.exit_code = v.holds ? kAllHold : kFoundViolation;
  return r;
}

Report run_theorem(const TheoremOptions& o) {
  const Prime p(o.prime);
  const AffineIndexMap map(o.a, o.b);
  const LinearRecurrence rec = o.rec ? parse_recurrence(*o.rec) : LinearRecurrence::fibonacci();
  const SequenceFamily family = family_for_theorem(o.which, rec);
  const Reading reading = parse_reading(o.reading);
  Report r{"theorem",
           {{"which", std::to_string(o.which)}, {"a", std::to_string(o.a)}, {"b", std::to_string(o.b)},
            {"prime", std::to_string(o.prime)}, {"digits", std::to_string(o.digits)}}};
  if (o.which == 2) r.inputs["reading"] = o.reading;
  if (o.which == 3) r.inputs["rec"] = rec_text(rec);

  const LPScan scan = lp_scan(family.at(map), p, o.digits);
  const bool predicted = family.predicts_lp(map, p, reading);
  const bool agrees = scan.identically_zero || predicted == scan.verdict.holds;
  r.verdicts.push_back(json{{"condition", predicted},
                            {"oracle", to_json(scan.verdict)},
                            {"identically_zero", scan.identically_zero},
                            {"agrees", agrees}});
  r.exit_code = agrees ? kAllHold : kFoundViolation;
  return r;
}

Report run_enumerate_b(const EnumerateOptions& o) {
  const Prime p(o.prime);
  const SequenceFamily family = parse_family(o.family, o.rec);
  const Reading reading = parse_reading(o.reading);
  Report r{"enumerate-b", {{"family", o.family}, {"a", std::to_string(o.a)}, {"prime", std::to_string(o.prime)},
                           {"digits", std::to_string(o.digits)}}};
  if (family.kind == FamilyKind::lucas) r.inputs["reading"] = o.reading;
  if (family.kind == FamilyKind::general) r.inputs["rec"] = rec_text(family.rec);
  if (o.a == 0) throw std::invalid_argument("--a must be at least 1");

  const ValidBReport report = enumerate_valid_b(family, o.a, p, o.digits, reading);
  for (const auto& c : report.candidates) {
    r.verdicts.push_back(json{{"b", c.b},
                              {"oracle", c.oracle},
                              {"predicted", c.predicted},
                              {"identically_zero", c.identically_zero}});
  }
  r.agreement = json{{"modulus", report.period.period},
                     {"preperiod", report.period.preperiod},
                     {"residues", report.residues()},
                     {"predicted_residues", report.predicted_residues()},
                     {"identically_zero", report.identically_zero_residues()},
                     {"disagreements", report.disagreements()}};
  r.exit_code = report.disagreements() == 0 ? kAllHold : kFoundViolation;
  return r;
}

Report run_alpha(const ScanOptions& o) {
  const Prime p(o.prime);
  const std::uint64_t limit = o.scan_limit.value_or(default_scan_limit(p));
  Report r{"alpha", {{"prime", std::to_string(o.prime)}, {"scan_limit", std::to_string(limit)}}};
  r.verdicts.push_back(json{{"prime", o.prime}, {"alpha", alpha(p, limit)}});
  return r;
}

Report run_period(const ScanOptions& o) {
  const Prime p(o.prime);
  const LinearRecurrence rec = o.rec ? parse_recurrence(*o.rec) : LinearRecurrence::fibonacci();
  const std::uint64_t limit = o.scan_limit.value_or(default_scan_limit(p));
  Report r{"period",
           {{"prime", std::to_string(o.prime)}, {"rec", rec_text(rec)}, {"scan_limit", std::to_string(limit)}}};
  const PeriodInfo info = period_mod(rec, p, limit);
  r.verdicts.push_back(json{{"preperiod", info.preperiod}, {"period", info.period}});
  return r;
}

// Sweeps one identity; `visit` receives every admissible index tuple.
struct ResidualSummary {
  std::uint64_t checked = 0;
  std::uint64_t nonzero = 0;
  std::optional<json> first_nonzero;

  void record(const mpz_class& residual, json where) {
    ++checked;
    if (residual != 0) {
      ++nonzero;
      if (!first_nonzero) {
        where["residual"] = residual.get_str();
        first_nonzero = std::move(where);
      }
    }
  }
};

ResidualSummary sweep_identity(const std::string& which, std::uint64_t n_max, const LinearRecurrence& rec) {
  ResidualSummary s;
  if (which == "catalan" || which == "lucas-catalan") {
    const bool lucas = which == "lucas-catalan";
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      for (std::uint64_t r = 0; r <= n; ++r) {
        s.record(lucas ? lucas_catalan_residual(n, r) : catalan_residual(n, r), json{{"n", n}, {"r", r}});
      }
    }
  } else if (which == "general") {
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      for (std::uint64_t r = 1; r <= n; ++r) {
        s.record(general_catalan_residual(rec, n, r), json{{"n", n}, {"r", r}});
      }
    }
  } else {
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      for (std::uint64_t r = 0; n + r <= n_max; ++r) {
        for (std::uint64_t k = 1; k < n + r; ++k) {
          s.record(shift_identity_residual(rec, n, r, k), json{{"n", n}, {"r", r}, {"k", k}});
        }
      }
    }
  }
  return s;
}

Report run_identity(const IdentityOptions& o) {
  Report r{"identity", {{"which", o.which}, {"n_max", std::to_string(o.n_max)}}};
  std::vector<std::optional<LinearRecurrence>> recs;
  if (o.which == "catalan" || o.which == "lucas-catalan") {
    recs.emplace_back(std::nullopt);
  } else if (o.rec) {
    recs.emplace_back(parse_recurrence(*o.rec));
    r.inputs["rec"] = *o.rec;
  } else {
    recs = {LinearRecurrence::fibonacci(), LinearRecurrence::lucas(), LinearRecurrence::pell()};
  }
  bool clean = true;
  for (const auto& rec : recs) {
    const ResidualSummary s = sweep_identity(o.which, o.n_max, rec.value_or(LinearRecurrence::fibonacci()));
    json v{{"identity", o.which}, {"checked", s.checked}, {"nonzero", s.nonzero}};
    if (rec) v["rec"] = rec_text(*rec);
    if (s.first_nonzero) v["first_nonzero"] = *s.first_nonzero;
    clean = clean && s.nonzero == 0;
    r.verdicts.push_back(std::move(v));
  }
  r.exit_code = clean ? kAllHold : kFoundViolation;
  return r;
}

Report run_special(const SpecialOptions& o) {
  Report r{"special", {{"seq", o.seq}, {"n", std::to_string(o.n)}}};
  const bool is_apery = o.seq == "apery";
  json v{{"n", o.n}, {"value", (is_apery ? apery(o.n) : omega(o.n)).get_str()}};
  if (o.prime) {
    const Prime p(*o.prime);
    r.inputs["prime"] = std::to_string(*o.prime);
    v["residue"] = is_apery ? apery_mod(o.n, p) : omega_mod(o.n, p);
  }
  r.verdicts.push_back(std::move(v));
  return r;
}

Report run_crossval(const CrossvalOptions& o) {
  const Reading reading = parse_reading(o.reading);
  GridSpec grid{primes_between(2, o.prime_max), o.a_min, o.a_max, o.b_min, o.b_max, o.digits};
  Report r{"crossval",
           {{"which", std::to_string(o.which)}, {"prime_max", std::to_string(o.prime_max)},
            {"a_min", std::to_string(o.a_min)}, {"a_max", std::to_string(o.a_max)},
            {"b_min", std::to_string(o.b_min)}, {"b_max", std::to_string(o.b_max)},
            {"digits", std::to_string(o.digits)}}};
  if (o.which == 2) r.inputs["reading"] = o.reading;

  std::vector<LinearRecurrence> recs;
  if (o.which == 3) {
    for (const auto& t : o.recs) recs.push_back(parse_recurrence(t));
    if (recs.empty()) recs = theorem3_default_set();
    std::string joined;
    for (const auto& rec : recs) joined += (joined.empty() ? "" : ";") + rec_text(rec);
    r.inputs["recs"] = joined;
  } else {
    recs.push_back(LinearRecurrence::fibonacci());
  }

  std::size_t cells = 0;
  std::size_t disagreements = 0;
  std::size_t flagged = 0;
  json list = json::array();
  json by_rec = json::object();
  for (const auto& rec : recs) {
    const Agreement agreement = cross_validate(family_for_theorem(o.which, rec), grid, reading);
    for (const auto& c : agreement.cells) {
      json row = cell_json(c);
      if (o.which == 3) row["rec"] = rec_text(rec);
      r.verdicts.push_back(std::move(row));
    }
    for (const auto& c : agreement.disagreement_list()) {
      json row = cell_json(c);
      if (o.which == 3) row["rec"] = rec_text(rec);
      if (c.witness) row["witness"] = to_json(*c.witness);
      list.push_back(std::move(row));
    }
    cells += agreement.cells.size();
    disagreements += agreement.disagreements();
    flagged += agreement.flagged();
    if (o.which == 3) {
      by_rec[rec_text(rec)] = json{{"cells", agreement.cells.size()},
                                   {"disagreements", agreement.disagreements()},
                                   {"flagged", agreement.flagged()}};
    }
  }
  r.agreement = json{{"cells", cells}, {"disagreements", disagreements}, {"flagged", flagged},
                     {"disagreement_list", list}};
  if (o.which == 3) (*r.agreement)["by_recurrence"] = by_rec;
  r.exit_code = disagreements == 0 ? kAllHold : kFoundViolation;
  return r;
}

Report run_counterexample(const CounterexampleOptions& o) {
  const AffineIndexMap map(o.a, o.b);
  const FamilyKind kind = o.family == "lucas" ? FamilyKind::lucas : FamilyKind::fibonacci;
  Report r{"counterexample", {{"a", std::to_string(o.a)}, {"b", std::to_string(o.b)}, {"family", o.family},
                              {"prime_bound", std::to_string(o.prime_bound)}, {"digits", std::to_string(o.digits)}}};
  try {
    const auto [p, verdict] = corollary1_counterexample(map, o.prime_bound, kind, o.digits);
    r.verdicts.push_back(to_json(verdict));
    r.exit_code = kFoundViolation;
  } catch (const NotFoundWithinBound&) {
    r.verdicts.push_back(json{{"found", false}, {"prime_bound", o.prime_bound}});
    r.exit_code = kAllHold;
  }
  return r;
}

}  // namespace

LinearRecurrence parse_recurrence(const std::string& text) {
  std::vector<std::int64_t> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(piece, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (piece.empty() || used != piece.size() || piece.front() == ' ') {
      throw std::invalid_argument("recurrence must be A0,A1,u,v with integer entries, got '" + text + "'");
    }
    parts.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) {
    throw std::invalid_argument("recurrence must have exactly four entries A0,A1,u,v, got '" + text + "'");
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lucas-property verification for Fibonacci, Lucas and second-order recurrences", "lucaslp"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "plain"}));
  app.fallthrough();

  std::function<Report()> action;

  LpCheckOptions lp;
  auto* lp_cmd = app.add_subcommand("lp-check", "Brute-force the digit congruence for one sequence");
  lp_cmd->add_option("spec", lp.spec, "Sequence kind")
      ->required()
      ->check(CLI::IsMember({"fib-affine", "lucas-affine", "general-affine", "power", "apery", "omega", "table"}));
  lp_cmd->add_option("--a", lp.a, "Index slope a");
  lp_cmd->add_option("--b", lp.b, "Index offset b");
  lp_cmd->add_option("--rec", lp.rec, "Recurrence A0,A1,u,v");
  lp_cmd->add_option("--base", lp.base, "Base of the power sequence");
  lp_cmd->add_option("--table", lp.table, "Explicit values S(0),S(1),...")->delimiter(',');
  lp_cmd->add_option("--prime", lp.prime, "Prime modulus")->required();
  lp_cmd->add_option("--digits", lp.digits, "Check every n below prime^digits")->capture_default_str();
  lp_cmd->callback([&] { action = [&] { return run_lp_check(lp); }; });

  TheoremOptions th;
  auto* th_cmd = app.add_subcommand("theorem", "Compare a theorem's condition with the oracle for one (a, b, p)");
  th_cmd->add_option("--which", th.which, "1 = Fibonacci, 2 = Lucas, 3 = general recurrence")
      ->required()
      ->check(CLI::IsMember({1, 2, 3}));
  th_cmd->add_option("--a", th.a)->required();
  th_cmd->add_option("--b", th.b)->required();
  th_cmd->add_option("--prime", th.prime)->required();
  th_cmd->add_option("--rec", th.rec, "Recurrence A0,A1,u,v for --which 3");
  th_cmd->add_option("--reading", th.reading)->check(CLI::IsMember({"as-proved", "as-stated"}));
  th_cmd->add_option("--digits", th.digits)->capture_default_str();
  th_cmd->callback([&] { action = [&] { return run_theorem(th); }; });

  EnumerateOptions en;
  auto* en_cmd = app.add_subcommand("enumerate-b", "List every offset b (mod the period) giving an LP sequence");
  en_cmd->add_option("--family", en.family)->required()->check(CLI::IsMember({"fib", "lucas", "general"}));
  en_cmd->add_option("--a", en.a)->required();
  en_cmd->add_option("--prime", en.prime)->required();
  en_cmd->add_option("--rec", en.rec, "Recurrence A0,A1,u,v for --family general");
  en_cmd->add_option("--reading", en.reading)->check(CLI::IsMember({"as-proved", "as-stated"}));
  en_cmd->add_option("--digits", en.digits)->capture_default_str();
  en_cmd->callback([&] { action = [&] { return run_enumerate_b(en); }; });

  ScanOptions al;
  auto* al_cmd = app.add_subcommand("alpha", "Rank of apparition of a prime in the Fibonacci numbers");
  al_cmd->add_option("--prime", al.prime)->required();
  al_cmd->add_option("--scan-limit", al.scan_limit);
  al_cmd->callback([&] { action = [&] { return run_alpha(al); }; });

  ScanOptions pe;
  auto* pe_cmd = app.add_subcommand("period", "Preperiod and period of a recurrence modulo a prime");
  pe_cmd->add_option("--prime", pe.prime)->required();
  pe_cmd->add_option("--rec", pe.rec, "Recurrence A0,A1,u,v (default Fibonacci)");
  pe_cmd->add_option("--scan-limit", pe.scan_limit);
  pe_cmd->callback([&] { action = [&] { return run_period(pe); }; });

  IdentityOptions id;
  auto* id_cmd = app.add_subcommand("identity", "Sweep an identity and summarise its exact residuals");
  id_cmd->add_option("--which", id.which)
      ->required()
      ->check(CLI::IsMember({"catalan", "lucas-catalan", "general", "shift"}));
  id_cmd->add_option("--n-max", id.n_max, "Largest index in the sweep")->capture_default_str();
  id_cmd->add_option("--rec", id.rec, "Recurrence A0,A1,u,v (default: Fibonacci, Lucas, Pell)");
  id_cmd->callback([&] { action = [&] { return run_identity(id); }; });

  SpecialOptions sp;
  auto* sp_cmd = app.add_subcommand("special", "Exact Apery number or omega coefficient");
  sp_cmd->add_option("--seq", sp.seq)->required()->check(CLI::IsMember({"apery", "omega"}));
  sp_cmd->add_option("--n", sp.n)->required();
  sp_cmd->add_option("--prime", sp.prime, "Also report the value mod this prime");
  sp_cmd->callback([&] { action = [&] { return run_special(sp); }; });

  CrossvalOptions cv;
  auto* cv_cmd = app.add_subcommand("crossval", "Theorem prediction against the oracle over an (a, b, p) grid");
  cv_cmd->add_option("--which", cv.which)->required()->check(CLI::IsMember({1, 2, 3}));
  cv_cmd->add_option("--reading", cv.reading)->check(CLI::IsMember({"as-proved", "as-stated"}));
  cv_cmd->add_option("--rec", cv.recs, "Recurrence A0,A1,u,v for --which 3; repeatable");
  cv_cmd->add_option("--prime-max", cv.prime_max)->capture_default_str();
  cv_cmd->add_option("--a-min", cv.a_min)->capture_default_str();
  cv_cmd->add_option("--a-max", cv.a_max)->capture_default_str();
  cv_cmd->add_option("--b-min", cv.b_min)->capture_default_str();
  cv_cmd->add_option("--b-max", cv.b_max)->capture_default_str();
  cv_cmd->add_option("--digits", cv.digits)->capture_default_str();
  cv_cmd->callback([&] { action = [&] { return run_crossval(cv); }; });

  CounterexampleOptions ce;
  auto* ce_cmd = app.add_subcommand("counterexample", "Smallest prime at which X(an+b) fails the oracle");
  ce_cmd->add_option("--a", ce.a)->required();
  ce_cmd->add_option("--b", ce.b)->required();
  ce_cmd->add_option("--family", ce.family)->check(CLI::IsMember({"fib", "lucas"}));
  ce_cmd->add_option("--prime-bound", ce.prime_bound)->capture_default_str();
  ce_cmd->add_option("--digits", ce.digits)->capture_default_str();
  ce_cmd->callback([&] { action = [&] { return run_counterexample(ce); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "lucaslp: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const Report report = action();
    out << format_report(report, parse_format(format));
    return report.exit_code;
  } catch (const std::exception& e) {
    err << "lucaslp: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace lucaslp
