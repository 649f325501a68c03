// Python bindings for the verification core: catalog access, the check
// suite, field dumps, the variation oracle, and the ambient pairings.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hsl/catalog.hpp"
#include "hsl/checks.hpp"
#include "hsl/report_json.hpp"
#include "hsl/variation.hpp"

namespace py = pybind11;

namespace {

hsl::CatalogEntry entry_from(const std::string& id,
                             const std::map<std::string, double>& params) {
  return hsl::build_entry(id, params);
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  py::module_ json = py::module_::import("json");
  return json.attr("loads")(j.dump());
}

hsl::HermitianVector make_vector(const std::vector<std::complex<double>>& comps,
                                 const std::vector<int>& signature) {
  if (comps.size() != signature.size() || (comps.size() != 2 && comps.size() != 3))
    throw hsl::Error(hsl::ErrorKind::BadParameter,
                     "vector and signature must both have length 2 or 3");
  std::array<std::complex<double>, 3> c{};
  std::array<int, 3> s{1, 1, 1};
  for (size_t k = 0; k < comps.size(); ++k) {
    c[k] = comps[k];
    s[k] = signature[k];
  }
  return hsl::HermitianVector(c, int(comps.size()), s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "verification core for Hamiltonian stationary Lagrangian surfaces";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const hsl::Error& e) {
      switch (e.kind()) {
        case hsl::ErrorKind::BadParameter:
        case hsl::ErrorKind::Unsupported:
        case hsl::ErrorKind::OutOfDomain:
          PyErr_SetString(PyExc_ValueError, e.what());
          break;
        default:
          PyErr_SetString(PyExc_RuntimeError, e.what());
      }
    }
  });

  m.def("list_catalog", [] {
    py::list out;
    for (const auto& s : hsl::list_catalog()) {
      py::dict d;
      d["id"] = s.id;
      d["ambient"] = s.ambient;
      d["control"] = s.control;
      py::list params;
      for (const auto& p : s.params) {
        py::dict q;
        q["name"] = p.name;
        q["constraint"] = p.constraint;
        params.append(q);
      }
      d["params"] = params;
      out.append(d);
    }
    return out;
  });

  m.def(
      "verify",
      [](const std::string& entry, const std::map<std::string, double>& params, int nx,
         int ny, const std::string& profile) {
        const auto e = entry_from(entry, params);
        const auto report = hsl::run_checks(e, nx, ny, hsl::ToleranceProfile::by_name(profile));
        return json_to_py(hsl::report_to_json(report));
      },
      py::arg("entry"), py::arg("params") = std::map<std::string, double>{},
      py::arg("nx") = 41, py::arg("ny") = 41, py::arg("profile") = "default",
      "Run the full check suite; returns the report as a dict.");

  m.def(
      "verify_json",
      [](const std::string& entry, const std::map<std::string, double>& params, int nx,
         int ny, const std::string& profile) {
        const auto e = entry_from(entry, params);
        const auto report = hsl::run_checks(e, nx, ny, hsl::ToleranceProfile::by_name(profile));
        return hsl::report_to_string(report);
      },
      py::arg("entry"), py::arg("params") = std::map<std::string, double>{},
      py::arg("nx") = 41, py::arg("ny") = 41, py::arg("profile") = "default",
      "Same as verify(), returned as the canonical JSON text.");

  m.def(
      "point_geometry",
      [](const std::string& entry, const std::map<std::string, double>& params, double x,
         double y) {
        const auto e = entry_from(entry, params);
        const auto p = hsl::analyze_point(e.map, x, y);
        py::dict d;
        d["x"] = p.x;
        d["y"] = p.y;
        d["g"] = py::make_tuple(p.g11, p.g12, p.g22);
        d["K"] = p.K_intrinsic;
        d["K_gauss"] = p.K_gauss;
        d["absH"] = p.absH;
        d["alpha"] = py::make_tuple(p.alpha[0], p.alpha[1]);
        d["delta_alpha"] = p.delta_alpha;
        d["d_alpha"] = p.d_alpha;
        d["nabla_perp_H_norm"] = p.nabla_perp_H_norm;
        d["nabla_A_norm"] = p.nabla_A_norm;
        d["rho_N"] = p.rho_N;
        d["wintgen_slack"] = p.K_intrinsic + p.rho_N - e.ambient.c - p.absH2 / 4.0;
        return d;
      },
      py::arg("entry"), py::arg("params") = std::map<std::string, double>{}, py::arg("x"),
      py::arg("y"));

  m.def(
      "dump_fields",
      [](const std::string& entry, const std::map<std::string, double>& params, int nx,
         int ny) {
        const auto e = entry_from(entry, params);
        const hsl::GridSpec grid{nx, ny, e.map.domain};
        py::list rows;
        for (int iy = 0; iy < ny; ++iy)
          for (int ix = 0; ix < nx; ++ix) {
            const auto p = hsl::analyze_point(e.map, grid.x(ix), grid.y(iy));
            rows.append(py::make_tuple(p.x, p.y, p.K_intrinsic, p.absH, p.delta_alpha,
                                       p.d_alpha, p.nabla_perp_H_norm, p.nabla_A_norm,
                                       p.rho_N));
          }
        return rows;
      },
      py::arg("entry"), py::arg("params") = std::map<std::string, double>{},
      py::arg("nx") = 21, py::arg("ny") = 21,
      "Rows of (x, y, K, absH, deltaAlpha, dAlpha, nablaPerpH_norm, nablaA_norm, rhoN).");

  m.def(
      "first_variation",
      [](const std::string& entry, const std::map<std::string, double>& params, double x0,
         double y0, double radius, double amplitude, double h) {
        const auto e = entry_from(entry, params);
        return hsl::first_variation(e.map, hsl::BumpFunction{x0, y0, radius, amplitude}, h);
      },
      py::arg("entry"), py::arg("params") = std::map<std::string, double>{}, py::arg("x0") = 0.0,
      py::arg("y0") = 0.0, py::arg("radius") = 1.0, py::arg("amplitude") = 1.0,
      py::arg("h") = 1e-3);

  m.def(
      "area",
      [](const std::string& entry, const std::map<std::string, double>& params, double x0,
         double x1, double y0, double y1) {
        const auto e = entry_from(entry, params);
        return hsl::area(e.map, hsl::Rect{x0, x1, y0, y1});
      },
      py::arg("entry"), py::arg("params") = std::map<std::string, double>{}, py::arg("x0"),
      py::arg("x1"), py::arg("y0"), py::arg("y1"));

  m.def(
      "herm",
      [](const std::vector<std::complex<double>>& u, const std::vector<std::complex<double>>& v,
         const std::vector<int>& signature) {
        return hsl::herm(make_vector(u, signature), make_vector(v, signature));
      },
      py::arg("u"), py::arg("v"), py::arg("signature"));

  m.def(
      "symplectic_form",
      [](const std::vector<std::complex<double>>& u, const std::vector<std::complex<double>>& v,
         const std::vector<int>& signature) {
        return hsl::symplectic_form(make_vector(u, signature), make_vector(v, signature));
      },
      py::arg("u"), py::arg("v"), py::arg("signature"));

  m.def("growth_ratio", &hsl::growth_ratio, py::arg("f_values"), py::arg("vol_values"),
        py::arg("p"), py::arg("r_list"));

  m.def(
      "gauss_bonnet_flat",
      [](const std::string& entry, const std::map<std::string, double>& params) {
        return hsl::gauss_bonnet_flat(entry_from(entry, params));
      },
      py::arg("entry"), py::arg("params") = std::map<std::string, double>{});
}
