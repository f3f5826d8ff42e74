#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gmpxx.h>

#include <sstream>
#include <string>
#include <vector>

#include "lucaslp/cli.hpp"
#include "lucaslp/errors.hpp"
#include "lucaslp/identities.hpp"
#include "lucaslp/lp.hpp"
#include "lucaslp/modmath.hpp"
#include "lucaslp/sequences.hpp"
#include "lucaslp/special.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through hex text, which is exact at any size.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    const std::string text = py::str(py::module_::import("builtins").attr("hex")(src));
    const bool negative = text[0] == '-';
    value.set_str(text.substr(negative ? 3 : 2), 16);
    if (negative) value = -value;
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str(16).c_str(), nullptr, 16);
  }
};
}  // namespace pybind11::detail

namespace {

using namespace lucaslp;

LinearRecurrence make_rec(py::tuple t) {
  if (t.size() != 4) throw std::invalid_argument("recurrence must be (A0, A1, u, v)");
  return {t[0].cast<std::int64_t>(), t[1].cast<std::int64_t>(), t[2].cast<std::int64_t>(),
          t[3].cast<std::int64_t>()};
}

py::tuple rec_tuple(const LinearRecurrence& r) { return py::make_tuple(r.A0, r.A1, r.u, r.v); }

Reading parse_reading(const std::string& s) {
  if (s == "as-proved") return Reading::as_proved;
  if (s == "as-stated") return Reading::as_stated;
  throw std::invalid_argument("reading must be 'as-proved' or 'as-stated'");
}

FamilyKind parse_kind(const std::string& s) {
  if (s == "fib") return FamilyKind::fibonacci;
  if (s == "lucas") return FamilyKind::lucas;
  if (s == "general") return FamilyKind::general;
  throw std::invalid_argument("family must be 'fib', 'lucas' or 'general'");
}

SequenceFamily make_family(const std::string& kind, py::object rec) {
  switch (parse_kind(kind)) {
    case FamilyKind::fibonacci: return SequenceFamily::fibonacci();
    case FamilyKind::lucas: return SequenceFamily::lucas();
    case FamilyKind::general:
      if (rec.is_none()) throw std::invalid_argument("general family needs rec=(A0, A1, u, v)");
      return SequenceFamily::general(make_rec(rec.cast<py::tuple>()));
  }
  throw std::logic_error("unreachable");
}

py::dict counterexample_dict(const Counterexample& c) {
  py::dict d;
  d["n"] = c.n;
  d["lhs"] = c.lhs;
  d["digits"] = c.digits;
  d["rhs"] = c.rhs;
  return d;
}

py::dict verdict_dict(const LPVerdict& v) {
  py::dict d;
  d["holds"] = v.holds;
  d["prime"] = v.prime.value();
  d["digit_bound"] = v.digit_bound;
  d["counterexample"] = v.counterexample ? py::object(counterexample_dict(*v.counterexample)) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lucas-property checks for Fibonacci-type sequences modulo primes";

  auto base = py::register_exception<Error>(m, "LucasLPError", PyExc_ValueError);
  py::register_exception<NotPrime>(m, "NotPrime", base.ptr());
  py::register_exception<NonInvertible>(m, "NonInvertible", base.ptr());
  py::register_exception<ScanExhausted>(m, "ScanExhausted", base.ptr());
  py::register_exception<IndexOrder>(m, "IndexOrder", base.ptr());
  py::register_exception<TableTooShort>(m, "TableTooShort", base.ptr());
  py::register_exception<NotFoundWithinBound>(m, "NotFoundWithinBound", base.ptr());

  // modular arithmetic
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("primes_between", [](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (const Prime& p : primes_between(lo, hi)) out.push_back(p.value());
    return out;
  }, py::arg("lo"), py::arg("hi"));
  m.def("digits_base_p", [](std::uint64_t n, std::uint64_t p) { return digits_base_p(n, Prime(p)).digits; },
        py::arg("n"), py::arg("p"), "Little-endian base-p digits of n.");
  m.def("pow_mod", [](std::int64_t b, std::uint64_t e, std::uint64_t p) { return pow_mod(b, e, Prime(p)); },
        py::arg("base"), py::arg("exp"), py::arg("p"));
  m.def("inverse_mod", [](std::int64_t a, std::uint64_t p) { return inverse_mod(a, Prime(p)); },
        py::arg("a"), py::arg("p"));
  m.def("binomial_exact", &binomial_exact, py::arg("n"), py::arg("k"));
  m.def("binomial_mod_lucas",
        [](std::uint64_t n, std::uint64_t k, std::uint64_t p) { return binomial_mod_lucas(n, k, Prime(p)); },
        py::arg("n"), py::arg("k"), py::arg("p"));

  // sequences
  m.def("fib", &fib, py::arg("n"));
  m.def("lucas_num", &lucas_num, py::arg("n"));
  m.def("fib_mod", [](std::uint64_t n, std::uint64_t p) { return fib_mod(n, Prime(p)); }, py::arg("n"), py::arg("p"));
  m.def("lucas_mod", [](std::uint64_t n, std::uint64_t p) { return lucas_mod(n, Prime(p)); }, py::arg("n"),
        py::arg("p"));
  m.def("rec_term", [](py::tuple rec, std::uint64_t n, std::optional<std::uint64_t> p) {
    return p ? rec_term(make_rec(rec), n, Prime(*p)) : rec_term(make_rec(rec), n);
  }, py::arg("rec"), py::arg("n"), py::arg("p") = py::none(), "Term n of rec = (A0, A1, u, v), optionally mod p.");
  m.def("s_poly", &s_poly, py::arg("k"), py::arg("u"), py::arg("v"));
  m.def("t_poly", &t_poly, py::arg("k"), py::arg("u"), py::arg("v"));
  m.def("period_mod", [](py::tuple rec, std::uint64_t p, std::optional<std::uint64_t> scan_limit) {
    const Prime prime(p);
    const PeriodInfo info = period_mod(make_rec(rec), prime, scan_limit.value_or(default_scan_limit(prime)));
    return py::make_tuple(info.preperiod, info.period);
  }, py::arg("rec"), py::arg("p"), py::arg("scan_limit") = py::none(), "Returns (preperiod, period).");
  m.def("alpha", [](std::uint64_t p, std::optional<std::uint64_t> scan_limit) {
    const Prime prime(p);
    return alpha(prime, scan_limit.value_or(default_scan_limit(prime)));
  }, py::arg("p"), py::arg("scan_limit") = py::none(), "Rank of apparition of p in the Fibonacci numbers.");

  // identities
  m.def("catalan_residual", &catalan_residual, py::arg("n"), py::arg("r"));
  m.def("lucas_catalan_residual", &lucas_catalan_residual, py::arg("n"), py::arg("r"));
  m.def("general_catalan_residual", [](py::tuple rec, std::uint64_t n, std::uint64_t r) {
    return general_catalan_residual(make_rec(rec), n, r);
  }, py::arg("rec"), py::arg("n"), py::arg("r"));
  m.def("shift_identity_residual", [](py::tuple rec, std::uint64_t n, std::uint64_t r, std::uint64_t k) {
    return shift_identity_residual(make_rec(rec), n, r, k);
  }, py::arg("rec"), py::arg("n"), py::arg("r"), py::arg("k"));

  // special sequences
  m.def("apery", &apery, py::arg("n"));
  m.def("apery_mod", [](std::uint64_t n, std::uint64_t p) { return apery_mod(n, Prime(p)); }, py::arg("n"),
        py::arg("p"));
  m.def("omega", &omega, py::arg("n"));
  m.def("omega_mod", [](std::uint64_t n, std::uint64_t p) { return omega_mod(n, Prime(p)); }, py::arg("n"),
        py::arg("p"));

  // Lucas property
  py::class_<SequenceSpec>(m, "SequenceSpec")
      .def_static("fib", [](std::uint64_t a, std::uint64_t b) { return SequenceSpec::fib_affine({a, b}); },
                  py::arg("a") = 1, py::arg("b") = 0)
      .def_static("lucas", [](std::uint64_t a, std::uint64_t b) { return SequenceSpec::lucas_affine({a, b}); },
                  py::arg("a") = 1, py::arg("b") = 0)
      .def_static("general", [](py::tuple rec, std::uint64_t a, std::uint64_t b) {
        return SequenceSpec::general_affine(make_rec(rec), {a, b});
      }, py::arg("rec"), py::arg("a") = 1, py::arg("b") = 0)
      .def_static("power", &SequenceSpec::power, py::arg("base"))
      .def_static("apery", &SequenceSpec::apery)
      .def_static("omega", &SequenceSpec::omega)
      .def_static("table", &SequenceSpec::table, py::arg("values"))
      .def("residues", [](const SequenceSpec& s, std::uint64_t p, std::uint64_t count) {
        return sequence_residues(s, Prime(p), count);
      }, py::arg("p"), py::arg("count"))
      .def("__repr__", [](const SequenceSpec& s) { return "SequenceSpec(" + s.describe() + ")"; })
      .def("__str__", &SequenceSpec::describe);

  m.def("lp_check", [](const SequenceSpec& s, std::uint64_t p, unsigned digits) {
    const Prime prime(p);
    std::optional<LPVerdict> v;
    {
      py::gil_scoped_release release;
      v = lp_bruteforce(s, prime, digits);
    }
    return verdict_dict(*v);
  }, py::arg("spec"), py::arg("p"), py::arg("digits") = 3,
     "Brute-force Lucas-property check over n < p**digits.");

  m.def("theorem1_condition", [](std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return theorem1_condition({a, b}, Prime(p));
  }, py::arg("a"), py::arg("b"), py::arg("p"));
  m.def("theorem2_condition", [](std::uint64_t a, std::uint64_t b, std::uint64_t p, const std::string& reading) {
    return theorem2_condition({a, b}, Prime(p), parse_reading(reading));
  }, py::arg("a"), py::arg("b"), py::arg("p"), py::arg("reading") = "as-proved");
  m.def("theorem3_condition", [](py::tuple rec, std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return theorem3_condition(make_rec(rec), {a, b}, Prime(p));
  }, py::arg("rec"), py::arg("a"), py::arg("b"), py::arg("p"));

  m.def("enumerate_valid_b", [](const std::string& family, std::uint64_t a, std::uint64_t p, py::object rec,
                                unsigned digits, const std::string& reading) {
    const SequenceFamily fam = make_family(family, rec);
    const ValidBReport r = enumerate_valid_b(fam, a, Prime(p), digits, parse_reading(reading));
    py::dict d;
    d["family"] = family;
    d["recurrence"] = rec_tuple(fam.recurrence());
    d["a"] = r.a;
    d["prime"] = r.prime.value();
    d["preperiod"] = r.period.preperiod;
    d["period"] = r.period.period;
    d["residues"] = r.residues();
    d["predicted_residues"] = r.predicted_residues();
    d["identically_zero"] = r.identically_zero_residues();
    d["disagreements"] = r.disagreements();
    return d;
  }, py::arg("family"), py::arg("a"), py::arg("p"), py::arg("rec") = py::none(), py::arg("digits") = 3,
     py::arg("reading") = "as-proved");

  m.def("cross_validate", [](const std::string& family, std::uint64_t p_max, std::uint64_t a_max,
                             std::uint64_t b_max, py::object rec, unsigned digits, const std::string& reading) {
    const SequenceFamily fam = make_family(family, rec);
    const GridSpec grid{primes_between(2, p_max), 1, a_max, 0, b_max, digits};
    const Agreement ag = cross_validate(fam, grid, parse_reading(reading));
    py::list bad;
    for (const GridCell& c : ag.disagreement_list()) {
      py::dict d;
      d["p"] = c.prime.value();
      d["a"] = c.map.a();
      d["b"] = c.map.b();
      d["predicted"] = c.predicted;
      d["oracle"] = c.oracle;
      d["witness"] = c.witness ? py::object(counterexample_dict(*c.witness)) : py::none();
      bad.append(d);
    }
    py::dict d;
    d["cells"] = ag.cells.size();
    d["disagreements"] = ag.disagreements();
    d["flagged"] = ag.flagged();
    d["disagreement_list"] = bad;
    return d;
  }, py::arg("family"), py::arg("p_max"), py::arg("a_max"), py::arg("b_max"), py::arg("rec") = py::none(),
     py::arg("digits") = 3, py::arg("reading") = "as-proved",
     "Compare the closed-form prediction with the oracle on p <= p_max, 1 <= a <= a_max, 0 <= b <= b_max.");

  m.def("corollary1_counterexample", [](std::uint64_t a, std::uint64_t b, std::uint64_t prime_bound,
                                        const std::string& family, unsigned digits) {
    const auto [p, v] = corollary1_counterexample({a, b}, prime_bound, parse_kind(family), digits);
    return verdict_dict(v);
  }, py::arg("a"), py::arg("b"), py::arg("prime_bound") = 50, py::arg("family") = "fib", py::arg("digits") = 3,
     "Smallest prime below prime_bound at which F(an+b) or L(an+b) fails the Lucas property.");
  m.def("lemma3_closed_form", [](const std::string& family, std::uint64_t n) {
    return lemma3_closed_form(parse_kind(family), n);
  }, py::arg("family"), py::arg("n"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    std::vector<std::string> argv{"lucaslp"};
    argv.insert(argv.end(), args.begin(), args.end());
    const int code = run_cli(argv, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run the command-line tool in process without argv[0]; returns (exit_code, stdout, stderr).");

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}
