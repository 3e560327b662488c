#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "distexp/constants.hpp"
#include "distexp/core_arith.hpp"
#include "distexp/empirical.hpp"
#include "distexp/identities.hpp"
#include "distexp/powerful.hpp"
#include "distexp/rho.hpp"
#include "distexp/squarefree.hpp"

namespace py = pybind11;
using namespace distexp;

namespace {

Factorization fact_of(u64 n) { return factorize(n); }

py::object rational_to_fraction(const Rational& value) {
  std::ostringstream num, den;
  num << boost::multiprecision::numerator(value);
  den << boost::multiprecision::denominator(value);
  py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(num.str())), py::int_(py::str(den.str())));
}

py::dict table_to_dict(const DistributionTable& table) {
  py::dict d;
  for (std::size_t k = 0; k < table.counts.size(); ++k) {
    d[py::int_(k)] = table.counts[k];
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_distexp, m) {
  m.doc() = "Distribution of the number of distinct exponents in prime "
            "factorizations: exact counters, density constants with rigorous "
            "truncation intervals, and identity checks.";

  py::class_<ConstantEstimate>(m, "ConstantEstimate")
      .def_readonly("name", &ConstantEstimate::name)
      .def_readonly("k_or_r", &ConstantEstimate::k_or_r)
      .def_readonly("value", &ConstantEstimate::value)
      .def_readonly("lower", &ConstantEstimate::lower)
      .def_readonly("upper", &ConstantEstimate::upper)
      .def_readonly("cutoff", &ConstantEstimate::cutoff)
      .def_readonly("terms_used", &ConstantEstimate::terms_used)
      .def_readonly("rigorous", &ConstantEstimate::rigorous)
      .def("width", &ConstantEstimate::width)
      .def("__repr__", [](const ConstantEstimate& e) {
        std::ostringstream os;
        os << "ConstantEstimate(" << e.name << ", k_or_r=" << e.k_or_r
           << ", value=" << e.value << ", interval=[" << e.lower << ", " << e.upper
           << "], rigorous=" << (e.rigorous ? "True" : "False") << ")";
        return os.str();
      });

  m.def("factorize", [](u64 n) {
    std::vector<std::pair<u64, u32>> out;
    for (const auto& pp : fact_of(n).factors) out.emplace_back(pp.prime, pp.exponent);
    return out;
  }, py::arg("n"), "Prime factorization of n as a list of (prime, exponent).");

  m.def("f", [](u64 n) { return f_distinct_exponents(fact_of(n)); }, py::arg("n"),
        "Number of distinct exponents in the prime factorization; f(1) = 0.");
  m.def("omega", [](u64 n) { return omega(fact_of(n)); }, py::arg("n"));
  m.def("g", [](u64 n) { return g_deficiency(fact_of(n)); }, py::arg("n"),
        "omega(n) - f(n).");
  m.def("is_powerful", [](u64 n) { return is_powerful(fact_of(n)); }, py::arg("n"));
  m.def("is_squarefree", [](u64 n) { return is_squarefree(fact_of(n)); }, py::arg("n"));
  m.def("is_special", [](u64 n) { return is_special(fact_of(n)); }, py::arg("n"),
        "True when all exponents are pairwise distinct.");
  m.def("is_prime", &is_prime, py::arg("n"));
  m.def("dedekind_psi", [](u64 n) { return dedekind_psi(fact_of(n)); }, py::arg("n"));
  m.def("powerful_part", [](u64 n) {
    auto split = powerful_part(fact_of(n));
    return std::make_pair(split.squarefree, split.powerful);
  }, py::arg("n"), "The unique (squarefree m, powerful l) with n = m * l, gcd = 1.");

  m.def("powerful_up_to", &powerful_up_to, py::arg("x"));
  m.def("special_powerful_up_to", &special_powerful_up_to, py::arg("x"),
        py::arg("r") = 0);
  m.def("numbers_with_deficiency_up_to", [](u64 x, u32 r) {
    return numbers_with_deficiency_up_to(x, r);
  }, py::arg("x"), py::arg("r") = 0,
        "All n <= x with g(n) = r; r = 0 lists the special numbers.");

  m.def("count_squarefree_coprime", [](double x, u64 h) {
    return count_squarefree_coprime(x, h);
  }, py::arg("x"), py::arg("h") = 1, "Q(x; h).");
  m.def("count_squarefree_coprime_omega", [](double x, u64 h, u32 s) {
    return count_squarefree_coprime_omega(x, h, s);
  }, py::arg("x"), py::arg("h"), py::arg("s"), "Q_s(x; h).");

  m.def("count_f_distribution", [](u64 x, unsigned threads) {
    SieveConfig cfg;
    cfg.threads = threads;
    return table_to_dict(count_f_distribution(x, cfg));
  }, py::arg("x"), py::arg("threads") = 0);
  m.def("count_g_distribution", [](u64 x, unsigned threads) {
    SieveConfig cfg;
    cfg.threads = threads;
    return table_to_dict(count_g_distribution(x, cfg));
  }, py::arg("x"), py::arg("threads") = 0);
  m.def("moment_sum", [](u64 x, const std::function<double(u32)>& phi) {
    return moment_sum(x, phi);
  }, py::arg("x"), py::arg("phi"),
        "sum over n <= x of phi(f(n)), with phi(0) treated as 0.");

  m.def("powerful_tail_bound", &powerful_tail_bound, py::arg("y"));
  m.def("ak_via_powerful", &ak_via_powerful, py::arg("k"), py::arg("y"));
  m.def("ak_via_rho", &ak_via_rho, py::arg("k"), py::arg("cutoff"));
  m.def("b_r", &b_r, py::arg("r"), py::arg("y"));
  m.def("m_phi", [](const std::function<double(u32)>& phi, double a, u32 k_cutoff,
                    u64 y) { return m_phi(phi, a, k_cutoff, y); },
        py::arg("phi"), py::arg("a"), py::arg("k_cutoff"),
        py::arg("y") = 100'000'000ull);
  m.def("powerful_reciprocal_sum", &powerful_reciprocal_sum,
        "zeta(2) zeta(3) / zeta(6).");

  m.def("rho", [](u32 k, u64 n) {
    RhoTable table(std::max<u64>(n, 2));
    return rational_to_fraction(table.rho(k, n));
  }, py::arg("k"), py::arg("n"),
        "Exact rho_k(n) as a fractions.Fraction (n squarefree).");

  m.def("nested_geometric_check", [](i64 a0, const std::vector<double>& xs) {
    auto rep = nested_geometric_check(a0, xs);
    py::dict d;
    d["lhs"] = rep.lhs;
    d["rhs"] = rep.rhs;
    d["difference"] = rep.difference;
    d["tail_bound"] = rep.tail_bound;
    d["truncation"] = rep.truncation;
    d["pass"] = rep.pass;
    return d;
  }, py::arg("a0"), py::arg("xs"));

  m.attr("__version__") = "0.1.0";
}
