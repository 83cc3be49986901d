#include "shl/corpus.hpp"
#include "shl/report_format.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

shl::Rational to_rational(const py::object& value) {
  const std::string text = py::str(value);
  shl::Rational q = shl::parse_rational(text);
  if (q <= 0) throw py::value_error("lambda must be positive");
  return q;
}

py::list sizes(const std::vector<shl::DegreeCohomology>& degrees, std::size_t shl::DegreeCohomology::*field) {
  py::list out;
  for (const auto& d : degrees) out.append(d.*field);
  return out;
}

py::list basis_rows(const shl::Subspace& s) {
  py::list rows;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    py::list row;
    for (const auto& c : s.basis_vector(i)) row.append(shl::to_string(c));
    rows.append(row);
  }
  return rows;
}

class Structure {
 public:
  explicit Structure(const shl::ManifoldSpec& spec) : spec_(spec), hc_(shl::build_structure(spec)) {}

  static Structure from_text(const std::string& text) { return Structure(shl::parse_model(text)); }
  static Structure load(const std::string& path) { return from_text(shl::read_file(path)); }

  int dim() const { return hc_.dim(); }
  std::string text() const { return shl::print_model(spec_); }

  py::dict report(const py::object& lambda) const {
    const auto r = shl::build_report(hc_, to_rational(lambda));
    py::dict out;
    out["dim"] = r.dim;
    out["lambda"] = shl::to_string(r.lambda);
    out["b"] = sizes(r.degrees, &shl::DegreeCohomology::b);
    out["h_bc"] = sizes(r.degrees, &shl::DegreeCohomology::h_bc);
    out["h_ae"] = sizes(r.degrees, &shl::DegreeCohomology::h_ae);
    py::list delta;
    for (const auto& d : r.degrees) delta.append(d.delta_s);
    out["delta_s"] = delta;
    out["hlc"] = r.hlc;
    out["hlc_holds"] = r.hlc_holds;
    out["h_plus_J"] = r.h_plus_J;
    out["h_minus_J"] = r.h_minus_J;
    out["b2_plus"] = r.b2_plus;
    out["b2_minus"] = r.b2_minus;
    out["dim_ker_PJ"] = r.dim_ker_PJ;
    out["dim_V"] = r.dim_V;
    out["pure_and_full"] = r.pure_and_full;
    out["harmonic_j_split"] = r.harmonic_j_split;
    out["harmonic_dR_in_bc"] = r.harmonic_dR_in_bc;
    out["harmonic_dR2"] = basis_rows(r.harmonic_dR2);
    out["V"] = basis_rows(r.V);
    return out;
  }

  std::string machine_report(const py::object& lambda, std::optional<int> degree) const {
    return shl::format_report_machine(shl::build_report(hc_, to_rational(lambda)), degree);
  }

  py::list check(const std::string& filter_name) const {
    auto filter = shl::parse_theorem_filter(filter_name);
    if (!filter) throw py::value_error("unknown theorem filter: " + filter_name);
    py::list out;
    for (const auto& v : shl::run_theorems(hc_, *filter)) {
      py::dict d;
      d["claim_id"] = v.claim_id;
      d["hypothesis"] = v.hypothesis_holds;
      d["conclusion"] = v.conclusion_holds;
      d["consistent"] = v.consistent;
      d["detail"] = v.detail;
      py::dict w;
      for (const auto& [k, value] : v.witnesses) w[py::str(k)] = value;
      d["witnesses"] = w;
      out.append(d);
    }
    return out;
  }

  std::size_t betti(int k) const { return shl::betti(hc_.structure().model(), k); }
  int delta_s(int k) const { return shl::delta_s(hc_, k); }

 private:
  shl::ManifoldSpec spec_;
  shl::HodgeComplex hc_;
};

}  // namespace

PYBIND11_MODULE(_shl, m) {
  m.doc() = "Exact symplectic Hodge theory on Lie-algebra models";

  static py::exception<shl::ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<shl::StructureError> structure_error(m, "StructureError", PyExc_ValueError);
  static py::exception<shl::InconsistencyError> inconsistency_error(m, "InconsistencyError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const shl::ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const shl::StructureError& e) {
      py::set_error(structure_error, e.what());
    } catch (const shl::InconsistencyError& e) {
      py::set_error(inconsistency_error, e.what());
    } catch (const shl::ModelError& e) {
      py::set_error(parse_error, e.what());
    }
  });

  py::class_<Structure>(m, "Structure")
      .def_static("from_text", &Structure::from_text, py::arg("text"))
      .def_static("load", &Structure::load, py::arg("path"))
      .def_property_readonly("dim", &Structure::dim)
      .def_property_readonly("text", &Structure::text)
      .def("report", &Structure::report, py::arg("lambda_") = py::int_(1))
      .def("machine_report", &Structure::machine_report, py::arg("lambda_") = py::int_(1), py::arg("degree") = py::none())
      .def("check", &Structure::check, py::arg("theorems") = "all")
      .def("betti", &Structure::betti, py::arg("k"))
      .def("delta_s", &Structure::delta_s, py::arg("k"));

  m.def("canonical_text", [](const std::string& text) { return shl::print_model(shl::parse_model(text)); }, py::arg("text"));
  m.def("random_structure", [](int dim, std::uint64_t seed) { return shl::print_model(shl::random_structure(dim, seed)); },
        py::arg("dim"), py::arg("seed"));
}
