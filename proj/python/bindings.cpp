#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "revmul/analysis.hpp"
#include "revmul/campaign.hpp"
#include "revmul/digits.hpp"
#include "revmul/enumerate.hpp"
#include "revmul/families.hpp"
#include "revmul/version.hpp"

namespace py = pybind11;
using namespace revmul;

namespace {

// 128-bit values cross the boundary as exact python ints, via decimal text.
py::int_ to_py(Value v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(v).c_str(), nullptr, 10));
}

Value from_py(const py::int_& x) {
  return parse_value(py::str(x).cast<std::string>());
}

template <typename T>
std::string repr_of(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_revmul, m) {
  m.doc() = "base-n reverse multiples: k*X = reverse(X) with 1 < k < n";
  m.attr("__version__") = kEngineVersion;

  py::register_exception<capacity_error>(m, "CapacityError", PyExc_OverflowError);
  py::register_exception<config_mismatch_error>(m, "ConfigMismatchError", PyExc_ValueError);
  py::register_exception<log_format_error>(m, "LogFormatError", PyExc_ValueError);

  py::class_<DigitString>(m, "DigitString")
      .def(py::init<int, std::vector<int>>(), py::arg("base"), py::arg("digits"))
      .def_property_readonly("base", &DigitString::base)
      .def_property_readonly("digits", [](const DigitString& d) { return d.digits(); })
      .def("__len__", &DigitString::size)
      .def("__eq__", [](const DigitString& a, const DigitString& b) { return a == b; })
      .def("__repr__", &repr_of<DigitString>);

  py::class_<Solution>(m, "Solution")
      .def_readonly("k", &Solution::k)
      .def_readonly("digits", &Solution::digits)
      .def_property_readonly("base", &Solution::base)
      .def_property_readonly("value", [](const Solution& s) { return to_py(s.value()); })
      .def_property_readonly("reversal", [](const Solution& s) { return to_py(s.reversal()); })
      .def("__eq__", [](const Solution& a, const Solution& b) { return a == b; })
      .def("__repr__", &repr_of<Solution>);

  m.def("value_of", [](const DigitString& d) { return to_py(value_of(d)); }, py::arg("digits"));
  m.def("reverse", &reverse, py::arg("digits"));
  m.def("digits_of",
        [](const py::int_& x, int base, std::size_t min_width) {
          return digits_of(from_py(x), base, min_width);
        },
        py::arg("x"), py::arg("base"), py::arg("min_width") = 1);
  m.def("check_solution", &check_solution, py::arg("digits"));
  m.def("to_solution", &to_solution, py::arg("digits"));

  const auto request = [](int base, int length, std::optional<int> k,
                          std::optional<std::size_t> limit) {
    return EnumerationRequest{base, length, k, limit};
  };
  m.def("enumerate_naive",
        [request](int base, int length, std::optional<int> k, std::optional<std::size_t> limit) {
          return enumerate_naive(request(base, length, k, limit));
        },
        py::arg("base"), py::arg("length"), py::arg("k") = py::none(),
        py::arg("limit") = py::none());
  m.def("enumerate_fast",
        [request](int base, int length, std::optional<int> k, std::optional<std::size_t> limit) {
          return enumerate_fast(request(base, length, k, limit));
        },
        py::arg("base"), py::arg("length"), py::arg("k") = py::none(),
        py::arg("limit") = py::none());
  m.def("solve_for_k", &solve_for_k, py::arg("base"), py::arg("length"), py::arg("k"));
  m.def("exists_solution", &exists_solution, py::arg("base"), py::arg("length"));

  py::class_<FClassification>(m, "FClassification")
      .def_readonly("p", &FClassification::p)
      .def_readonly("s", &FClassification::s)
      .def_readonly("f", &FClassification::f)
      .def_readonly("p_prime", &FClassification::p_prime)
      .def_readonly("anomaly", &FClassification::anomaly)
      .def("__repr__", [](const FClassification& fc) {
        std::ostringstream os;
        os << "FClassification(p=" << fc.p << ", s=" << fc.s << ", f=";
        if (fc.f) {
          os << *fc.f;
        } else {
          os << "None";
        }
        os << ", p_prime=" << (fc.p_prime ? "True" : "False") << ")";
        return os.str();
      });

  py::class_<ProjectionOutcome>(m, "ProjectionOutcome")
      .def_readonly("projected", &ProjectionOutcome::projected)
      .def_readonly("same_k_holds", &ProjectionOutcome::same_k_holds)
      .def_readonly("any_k", &ProjectionOutcome::any_k)
      .def_readonly("source_f", &ProjectionOutcome::source_f)
      .def_property_readonly("counterexample", &ProjectionOutcome::counterexample);

  m.def("is_prime", &is_prime, py::arg("m"));
  m.def("alternating_sum", &alternating_sum, py::arg("digits"));
  m.def("f_class", &f_class, py::arg("solution"));
  m.def("delete_middle", &delete_middle, py::arg("digits"));
  m.def("question1_check", &question1_check, py::arg("solution"));
  m.def("kaczynski_project", &kaczynski_project, py::arg("solution"));
  m.def("derived_identity_check", &derived_identity_check, py::arg("solution"));

  py::class_<FamilyParams>(m, "FamilyParams")
      .def(py::init<int, int>(), py::arg("base"), py::arg("a"))
      .def_readonly("base", &FamilyParams::base)
      .def_readonly("a", &FamilyParams::a);

  m.def("family5", [](int base, int a) { return family5(FamilyParams{base, a}); },
        py::arg("base"), py::arg("a"));
  m.def("family4", [](int base, int a) { return family4(FamilyParams{base, a}); },
        py::arg("base"), py::arg("a"));
  m.def("family_all", [](int base) {
          py::list out;
          for (const FamilyPair& p : family_all(base)) {
            out.append(py::make_tuple(p.params.a, p.four, p.five));
          }
          return out;
        },
        py::arg("base"));
  m.def("corollary_solutions", &corollary_solutions, py::arg("base"));
  m.def("is_in_family", &is_in_family, py::arg("solution"));

  py::class_<CampaignConfig>(m, "CampaignConfig")
      .def(py::init([](int n_lo, int n_hi, std::vector<int> lengths, bool require_prime_p,
                       int workers, std::string output_path) {
             return CampaignConfig{n_lo, n_hi, std::move(lengths), require_prime_p, workers,
                                   std::move(output_path)};
           }),
           py::arg("n_lo"), py::arg("n_hi"), py::arg("lengths") = std::vector<int>{5},
           py::arg("require_prime_p") = false, py::arg("workers") = 1,
           py::arg("output_path") = std::string())
      .def_readwrite("n_lo", &CampaignConfig::n_lo)
      .def_readwrite("n_hi", &CampaignConfig::n_hi)
      .def_readwrite("lengths", &CampaignConfig::lengths)
      .def_readwrite("require_prime_p", &CampaignConfig::require_prime_p)
      .def_readwrite("workers", &CampaignConfig::workers)
      .def_readwrite("output_path", &CampaignConfig::output_path);

  py::class_<CounterexampleRecord>(m, "CounterexampleRecord")
      .def_readonly("source", &CounterexampleRecord::source)
      .def_readonly("outcome", &CounterexampleRecord::outcome)
      .def_readonly("f", &CounterexampleRecord::f)
      .def_readonly("p_prime", &CounterexampleRecord::p_prime);

  m.def("find_counterexamples", &find_counterexamples, py::arg("config"));
  m.def("f1_nonfamily_search", &f1_nonfamily_search, py::arg("config"));
  m.def("f_spectrum_json", [](const CampaignConfig& cfg) { return f_spectrum(cfg).to_json(); },
        py::arg("config"));
  m.def("existence_survey_json",
        [](const CampaignConfig& cfg) { return existence_survey(cfg).to_json(); },
        py::arg("config"));
}
