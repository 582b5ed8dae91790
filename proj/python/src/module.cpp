#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "esomit/appendix.hpp"
#include "esomit/eigenspace.hpp"
#include "esomit/error.hpp"
#include "esomit/feasibility.hpp"
#include "esomit/io.hpp"
#include "esomit/presets.hpp"
#include "esomit/steady_state.hpp"

namespace py = pybind11;
using namespace esomit;

namespace {

struct Model {
  std::string name;
  FrequencyConvention convention = FrequencyConvention::Angular;
  SystemParams params;
  Drive drive;
  Grid spectrum{-5e6, 5e6, 2001};
};

Model make_model(const std::string& preset_name, const std::map<std::string, std::string>& overrides,
                 const std::string& convention) {
  Model m;
  m.convention = parse_convention(convention);
  RawParams raw;
  if (!preset_name.empty()) {
    const Preset p = preset(preset_name, m.convention);
    raw = io::to_raw(p.params, p.drive);
    m.name = preset_name;
    m.spectrum = p.spectrum;
  } else {
    m.name = "inline";
  }
  for (const auto& [k, v] : overrides) raw[k] = v;
  m.params = build_system(raw, m.convention);
  if (!raw.contains("Pc")) raw["Pc"] = "1 mW";
  m.drive = build_drive(m.params, raw, m.convention);
  return m;
}

// Dicts travel through JSON text so Python sees plain built-in types.
py::object to_python(const io::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict spectrum_dict(const SpectrumTable& t) {
  const std::size_t n = t.rows.size();
  py::array_t<double> dp(n), T(n), tau(n);
  py::array_t<std::complex<double>> tr(n);
  auto a = dp.mutable_unchecked<1>();
  auto b = T.mutable_unchecked<1>();
  auto c = tau.mutable_unchecked<1>();
  auto d = tr.mutable_unchecked<1>();
  for (std::size_t i = 0; i < n; ++i) {
    a(i) = t.rows[i].delta_p;
    b(i) = t.rows[i].T;
    c(i) = t.rows[i].tau_g;
    d(i) = t.rows[i].t;
  }
  py::dict out;
  out["delta_p"] = dp;
  out["t"] = tr;
  out["T"] = T;
  out["tau_g"] = tau;
  return out;
}

std::vector<double> grid_or_default(const Model& m, std::optional<std::tuple<double, double, std::size_t>> grid) {
  if (!grid) return m.spectrum.values();
  const auto [lo, hi, n] = *grid;
  return Grid{lo, hi, n}.values();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exceptional-surface optomechanics core";

  static py::exception<Error> error(mod, "EsomitError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error;
      py::object inst = exc(std::string(e.what()));
      inst.attr("kind") = std::string(to_string(e.kind()));
      inst.attr("subject") = e.subject();
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  mod.def("preset_names", [] { return preset_names(); });
  mod.def("preset_info", [](const std::string& name, const std::string& convention) {
    return to_python(io::to_json(preset(name, parse_convention(convention))));
  }, py::arg("name"), py::arg("convention") = "angular");

  mod.def("eigen_split", [](double J, double t0, double gamma1, double gamma2, double phi3_pi) {
    const EigenSplit e = eigen_split(J, t0, gamma1, gamma2, Phase::pi_units(phi3_pi));
    py::dict d;
    d["omega_plus"] = e.omega_plus;
    d["omega_minus"] = e.omega_minus;
    d["kappa_plus"] = e.kappa_plus;
    d["kappa_minus"] = e.kappa_minus;
    d["alpha"] = e.alpha;
    d["beta"] = e.beta;
    return d;
  }, py::arg("J"), py::arg("t0"), py::arg("gamma1"), py::arg("gamma2"), py::arg("phi3_pi"));
  mod.def("es_coupling", &es_coupling, py::arg("t0"), py::arg("gamma1"), py::arg("gamma2"));

  py::class_<Model>(mod, "Model")
      .def(py::init(&make_model), py::arg("preset") = "", py::arg("overrides") = std::map<std::string, std::string>{},
           py::arg("convention") = "angular")
      .def_readonly("name", &Model::name)
      .def_property_readonly("params", [](const Model& m) { return to_python(io::to_json(m.params)); })
      .def_property_readonly("drive", [](const Model& m) { return to_python(io::to_json(m.drive)); })
      .def("classify", [](const Model& m) {
        const PhaseClass c = classify_point(m.params);
        py::dict d;
        d["kind"] = std::string(to_string(c.kind));
        d["omega_splitting"] = c.omega_splitting;
        d["kappa_splitting"] = c.kappa_splitting;
        return d;
      })
      .def("steady_state", [](const Model& m) { return to_python(io::to_json(solve_steady(m.params, m.drive))); })
      .def("spectrum", [](const Model& m, std::optional<std::tuple<double, double, std::size_t>> grid) {
        SpectrumTable t;
        {
          py::gil_scoped_release release;
          t = transmission_spectrum(m.params, m.drive, grid_or_default(m, grid), m.name, m.convention);
        }
        return spectrum_dict(t);
      }, py::arg("grid") = py::none())
      .def("transmission", [](const Model& m, double delta_p) {
        return transmission_at(m.params, solve_steady(m.params, m.drive), m.drive, delta_p);
      }, py::arg("delta_p"))
      .def("group_delay", [](const Model& m, double delta_p, std::optional<double> h) {
        return group_delay(m.params, m.drive, delta_p, h.value_or(default_delay_step(m.params))).value;
      }, py::arg("delta_p"), py::arg("h") = py::none())
      .def("crosscheck", [](const Model& m, std::optional<std::tuple<double, double, std::size_t>> grid) {
        return to_python(io::to_json(crosscheck_appendix(m.params, m.drive, grid_or_default(m, grid), m.name)));
      }, py::arg("grid") = py::none())
      .def("check_ranges", [](const Model& m) { return to_python(io::to_json(check_ranges(m.params, m.convention))); });
}
