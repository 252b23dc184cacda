#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "qnc/character.hpp"
#include "qnc/errors.hpp"
#include "qnc/operator.hpp"
#include "qnc/pairing.hpp"
#include "qnc/primes.hpp"
#include "qnc/spectral.hpp"
#include "qnc/zeros.hpp"

namespace py = pybind11;

namespace {

// Accepts int, float or a decimal string; strings keep full precision.
qnc::Real to_real(const py::object& obj, qnc::Precision bits) {
  if (py::isinstance<py::str>(obj)) return qnc::Real(obj.cast<std::string>(), bits);
  if (py::isinstance<py::int_>(obj)) return qnc::Real(obj.cast<long>(), bits);
  return qnc::Real(obj.cast<double>(), bits);
}

py::object from_real(const qnc::Real& x, bool as_string) {
  if (as_string) return py::str(x.to_string());
  return py::float_(x.to_double());
}

std::complex<double> to_std(const qnc::Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

qnc::Complex from_std(std::complex<double> w, qnc::Precision bits) {
  return qnc::Complex(w.real(), w.imag(), bits);
}

qnc::Variant make_variant(const std::string& name,
                          const std::optional<qnc::CharacterTable>& character) {
  switch (qnc::parse_variant_kind(name)) {
    case qnc::VariantKind::modified:
      return qnc::Variant::modified();
    case qnc::VariantKind::weighted:
      if (!character) throw qnc::DomainError("weighted variant needs a character");
      return qnc::Variant::weighted(*character);
    case qnc::VariantKind::standard:
      break;
  }
  return qnc::Variant::standard();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "QNC pairing of primes, operator truncations, spectra and determinants";

  py::register_exception<qnc::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<qnc::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<qnc::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<qnc::ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<qnc::NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

  m.def("first_primes", [](std::size_t n) { return qnc::first_primes(n).primes; }, py::arg("n"));

  m.def(
      "eval_F",
      [](const py::object& x, const py::object& y, double target_rel_err, long precision) {
        qnc::SeriesValue v =
            qnc::eval_F(to_real(x, precision), to_real(y, precision), target_rel_err);
        py::dict out;
        out["value"] = v.value.to_string();
        out["truncation_error"] = v.truncation_error.to_string();
        out["terms_used"] = v.terms_used;
        return out;
      },
      py::arg("x"), py::arg("y"), py::arg("target_rel_err") = 1e-40,
      py::arg("precision") = qnc::kDefaultPrecision);

  m.def(
      "qnc",
      [](const py::object& x, const py::object& y, long precision, bool as_string) {
        return from_real(qnc::qnc(to_real(x, precision), to_real(y, precision)), as_string);
      },
      py::arg("x"), py::arg("y"), py::arg("precision") = qnc::kDefaultPrecision,
      py::arg("as_string") = false);

  m.def(
      "qnc_bound",
      [](long p, long q, long precision, bool as_string) {
        return from_real(qnc::qnc_bound(p, q, precision), as_string);
      },
      py::arg("p"), py::arg("q"), py::arg("precision") = qnc::kDefaultPrecision,
      py::arg("as_string") = false);

  m.def(
      "tilde_correction",
      [](long p, long q, long precision) {
        return qnc::tilde_correction(p, q, precision).to_double();
      },
      py::arg("p"), py::arg("q"), py::arg("precision") = qnc::kDefaultPrecision);

  py::class_<qnc::CharacterTable>(m, "CharacterTable")
      .def(py::init([](long modulus, const std::map<long, std::complex<double>>& values) {
             std::map<long, qnc::Complex> table;
             for (const auto& [r, v] : values) table.emplace(r, from_std(v, qnc::kDefaultPrecision));
             return qnc::CharacterTable(modulus, std::move(table));
           }),
           py::arg("modulus"), py::arg("values"))
      .def_static("principal",
                  [](long modulus) { return qnc::CharacterTable::principal(modulus); })
      .def_static("load", [](const std::string& path) { return qnc::load_character(path); })
      .def_property_readonly("modulus", &qnc::CharacterTable::modulus)
      .def("__call__", [](const qnc::CharacterTable& chi, long n) { return to_std(chi.value(n)); });

  py::class_<qnc::QncMatrix>(m, "Matrix")
      .def_property_readonly("n", &qnc::QncMatrix::n)
      .def_property_readonly("variant",
                             [](const qnc::QncMatrix& a) { return std::string(to_string(a.kind())); })
      .def_property_readonly("primes", &qnc::QncMatrix::primes)
      .def_property_readonly("precision", &qnc::QncMatrix::precision)
      .def_property_readonly("tail_divergent",
                             [](const qnc::QncMatrix& a) { return a.tail_bound().divergent; })
      .def_property_readonly("tail_bound",
                             [](const qnc::QncMatrix& a) { return a.tail_bound().value.to_double(); })
      .def("entry",
           [](const qnc::QncMatrix& a, std::size_t i, std::size_t j) -> py::object {
             if (i >= a.n() || j >= a.n()) throw py::index_error("entry index out of range");
             if (a.is_complex()) return py::cast(to_std(a.entry(i, j)));
             return py::float_(a.re(i, j).to_double());
           })
      .def("entry_str",
           [](const qnc::QncMatrix& a, std::size_t i, std::size_t j) {
             if (i >= a.n() || j >= a.n()) throw py::index_error("entry index out of range");
             return a.re(i, j).to_string();
           })
      .def("to_list", [](const qnc::QncMatrix& a) {
        std::vector<std::vector<double>> rows(a.n(), std::vector<double>(a.n()));
        for (std::size_t i = 0; i < a.n(); ++i) {
          for (std::size_t j = 0; j < a.n(); ++j) rows[i][j] = a.re(i, j).to_double();
        }
        return rows;
      });

  m.def(
      "build_matrix",
      [](std::size_t n, const std::string& variant,
         const std::optional<qnc::CharacterTable>& character, long precision) {
        return qnc::build_matrix(n, make_variant(variant, character), precision);
      },
      py::arg("n"), py::arg("variant") = "standard", py::arg("character") = py::none(),
      py::arg("precision") = qnc::kDefaultPrecision);

  m.def("entry_abs_sum", [](const qnc::QncMatrix& a) { return qnc::entry_abs_sum(a).to_double(); });
  m.def("hs_norm_sq", [](const qnc::QncMatrix& a) { return qnc::hs_norm_sq(a).to_double(); });
  m.def(
      "tail_bound",
      [](std::size_t n, const std::string& variant, long precision) {
        return qnc::tail_bound(n, qnc::parse_variant_kind(variant), precision).value.to_double();
      },
      py::arg("n"), py::arg("variant") = "standard", py::arg("precision") = qnc::kDefaultPrecision);

  py::class_<qnc::SpectrumResult>(m, "Spectrum")
      .def_property_readonly("lambdas",
                             [](const qnc::SpectrumResult& s) {
                               std::vector<double> out;
                               for (const auto& l : s.lambdas) out.push_back(l.to_double());
                               return out;
                             })
      .def_property_readonly("lambdas_str",
                             [](const qnc::SpectrumResult& s) {
                               std::vector<std::string> out;
                               for (const auto& l : s.lambdas) out.push_back(l.to_string());
                               return out;
                             })
      .def_readonly("pairing_defect", &qnc::SpectrumResult::pairing_defect)
      .def_readonly("source_dim", &qnc::SpectrumResult::source_dim)
      .def_property_readonly("solver_tolerance", [](const qnc::SpectrumResult& s) {
        return s.solver_tolerance.to_double();
      });

  m.def("singular_values", [](const qnc::QncMatrix& a) { return qnc::singular_values(a); });
  m.def("det_from_spectrum", [](const qnc::SpectrumResult& s, std::complex<double> w) {
    return to_std(qnc::det_from_spectrum(s, from_std(w, s.solver_tolerance.precision())));
  });
  m.def("det2_from_spectrum", [](const qnc::SpectrumResult& s, std::complex<double> w) {
    return to_std(qnc::det2_from_spectrum(s, from_std(w, s.solver_tolerance.precision())));
  });
  m.def(
      "det_series_coeffs",
      [](const qnc::QncMatrix& a, std::optional<std::size_t> order) {
        std::vector<std::complex<double>> out;
        for (const auto& c : qnc::det_series_coeffs(a, order).coeffs) out.push_back(to_std(c));
        return out;
      },
      py::arg("m"), py::arg("order") = py::none());

  py::class_<qnc::ZetaZeroTable>(m, "ZetaZeroTable")
      .def_readonly("ordinates", &qnc::ZetaZeroTable::ordinates)
      .def_readonly("source", &qnc::ZetaZeroTable::source)
      .def("__len__", &qnc::ZetaZeroTable::size);

  m.def("load_zeros", [](const std::string& path) { return qnc::load_zeros(path); });
  m.def("count_estimate", &qnc::count_estimate, py::arg("T"));
  m.def("reciprocal_partial_sum", &qnc::reciprocal_partial_sum, py::arg("table"), py::arg("k"));

  py::class_<qnc::ContradictionReport>(m, "ContradictionReport")
      .def_readonly("n", &qnc::ContradictionReport::n)
      .def_readonly("zeros_used", &qnc::ContradictionReport::zeros_used)
      .def_readonly("trace_norm_bound", &qnc::ContradictionReport::trace_norm_bound)
      .def_readonly("partial_sums", &qnc::ContradictionReport::partial_sums)
      .def_readonly("crossover_k", &qnc::ContradictionReport::crossover_k)
      .def("to_json", [](const qnc::ContradictionReport& r) { return r.to_json().dump(); })
      .def("to_table", &qnc::ContradictionReport::to_table);

  m.def("contradiction_report",
        [](const qnc::SpectrumResult& s, const qnc::QncMatrix& a, const qnc::ZetaZeroTable& t) {
          return qnc::contradiction_report(s, a.tail_bound(), t);
        },
        py::arg("spectrum"), py::arg("matrix"), py::arg("zeros"));
}
