#include "hsl/catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "hsl/surface_geometry.hpp"

namespace hsl {

namespace {

constexpr double kMargin = 1e-6;  // slack enforced on every strict inequality
constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& clause) {
  if (!ok) throw Error(ErrorKind::BadParameter, "parameter constraint violated: " + clause);
}

CJet czero(const RJet& x) { return CJet(x.order()); }

// Build-time guard: every lifted entry must satisfy its quadric/sphere
// constraint identically; scan a fixed 10x10 grid before handing the
// entry to any check.
void verify_lift_constraint(const CatalogEntry& e) {
  if (!e.ambient.lifted()) return;
  const double target = e.ambient.lift_target();
  for (int iy = 0; iy < 10; ++iy)
    for (int ix = 0; ix < 10; ++ix) {
      const double x = e.map.domain.x0 + e.map.domain.width() * ix / 9.0;
      const double y = e.map.domain.y0 + e.map.domain.height() * iy / 9.0;
      const auto L = eval_jet(e.map, x, y, 0);
      double v = 0.0;
      for (int k = 0; k < e.ambient.lift_dim; ++k)
        v += e.ambient.signature[k] * std::norm(L[k].value());
      if (std::abs(v - target) > kLiftConstraintTol) {
        std::ostringstream msg;
        msg << "catalog formula violates the lift constraint at (" << x << ", " << y
            << "): residual " << std::abs(v - target);
        throw Error(ErrorKind::ContractViolation, msg.str());
      }
    }
}

}  // namespace

CatalogEntry build_c2_plane() {
  CatalogEntry e;
  e.id = "c2-plane";
  e.ambient = AmbientSpace::flat_c2();
  e.map.ambient = e.ambient;
  e.map.domain = {-kPi, kPi, -kPi, kPi};
  e.map.eval = [](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
    return {complexify(x), complexify(y), czero(x)};
  };
  e.expected.flat = true;
  e.expected.minimal = true;
  e.expected.parallel_H = true;
  e.expected.parallel_A = true;
  e.expected.constant_absH = 0.0;
  return e;
}

CatalogEntry build_c2_cylinder(double r) {
  require(r > 0.0, "r > 0");
  CatalogEntry e;
  e.id = "c2-cylinder";
  e.ambient = AmbientSpace::flat_c2();
  e.params = {{"r", r}};
  e.map.ambient = e.ambient;
  e.map.domain = {0.0, 2.0 * kPi * r, -kPi, kPi};
  e.map.periodic = {true, false};
  e.map.eval = [r](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
    return {cexp_i(x * (1.0 / r)) * r, complexify(y), czero(x)};
  };
  e.expected.flat = true;
  e.expected.parallel_H = true;
  e.expected.parallel_A = true;
  e.expected.constant_absH = 1.0 / r;
  return e;
}

CatalogEntry build_c2_torus(double r1, double r2) {
  require(r1 > 0.0, "r1 > 0");
  require(r2 > 0.0, "r2 > 0");
  CatalogEntry e;
  e.id = "c2-torus";
  e.ambient = AmbientSpace::flat_c2();
  e.params = {{"r1", r1}, {"r2", r2}};
  e.map.ambient = e.ambient;
  e.map.domain = {0.0, 2.0 * kPi * r1, 0.0, 2.0 * kPi * r2};
  e.map.periodic = {true, true};
  e.map.eval = [r1, r2](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
    return {cexp_i(x * (1.0 / r1)) * r1, cexp_i(y * (1.0 / r2)) * r2, czero(x)};
  };
  e.expected.flat = true;
  e.expected.parallel_H = true;
  e.expected.parallel_A = true;
  e.expected.constant_absH = std::sqrt(1.0 / (r1 * r1) + 1.0 / (r2 * r2));
  return e;
}

CatalogEntry build_cp2_flat(double a, double b) {
  require(std::abs(a) > kMargin, "a != 0");
  CatalogEntry e;
  e.id = "cp2-flat";
  e.ambient = AmbientSpace::proj_cp2();
  e.params = {{"a", a}, {"b", b}};
  e.map.ambient = e.ambient;
  e.map.domain = {-kPi, kPi, -kPi, kPi};
  const double w = std::sqrt(1.0 + a * a + b * b);  // transverse frequency
  const double ra = std::sqrt(1.0 + a * a);
  e.map.eval = [a, b, w, ra](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
    const CJet phase = cexp_i(x * a + y * b);
    const RJet sy = sin(y * w), cy = cos(y * w);
    const CJet L1 = cexp_i(x * (-1.0 / a)) * (a / ra);
    const CJet L2 = phase * sy * (1.0 / w);
    const CJet L3 = phase * (complexify(cy) - sy * std::complex<double>(0.0, b / w)) * (1.0 / ra);
    return {L1, L2, L3};
  };
  e.expected.flat = true;
  e.expected.parallel_H = true;
  e.expected.parallel_A = true;
  verify_lift_constraint(e);
  return e;
}

CatalogEntry build_ch2_family(int k, double a, double b) {
  if (k < 1 || k > 6)
    throw Error(ErrorKind::Unsupported, "ch2 family index must be in 1..6");
  CatalogEntry e;
  e.id = "ch2-family" + std::to_string(k);
  e.ambient = AmbientSpace::hyp_ch2();
  e.map.ambient = e.ambient;
  e.map.domain = {-kPi, kPi, -kPi, kPi};
  e.expected.flat = true;
  e.expected.parallel_H = true;
  e.expected.parallel_A = true;

  switch (k) {
    case 1: {
      require(std::abs(a) > kMargin, "a != 0");
      require(a * a + b * b < 1.0 - kMargin, "a^2 + b^2 < 1");
      e.params = {{"a", a}, {"b", b}};
      const double s = std::sqrt(1.0 - a * a - b * b);
      const double ra = std::sqrt(1.0 - a * a);
      e.map.eval = [a, b, s, ra](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
        const CJet phase = cexp_i(x * a + y * b);
        const RJet sh = sinh(y * s), ch = cosh(y * s);
        const CJet L1 =
            phase * (complexify(ch) - sh * std::complex<double>(0.0, b / s)) * (1.0 / ra);
        const CJet L2 = phase * sh * (1.0 / s);
        const CJet L3 = cexp_i(x * (1.0 / a)) * (a / ra);
        return {L1, L2, L3};
      };
      break;
    }
    case 2: {
      require(b * b > kMargin, "0 < b^2");
      require(b * b < 1.0 - kMargin, "b^2 < 1");
      e.params = {{"b", b}};
      const double q = std::sqrt(1.0 - b * b);
      e.map.eval = [b, q](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
        const CJet phase = cexp_i(x * q + y * b);
        const CJet L1 = (complexify(y) + std::complex<double>(0.0, 1.0 / b)) * phase;
        const CJet L2 = complexify(y) * phase;
        const CJet L3 = cexp_i(x * (1.0 / q)) * (q / b);
        return {L1, L2, L3};
      };
      break;
    }
    case 3: {
      require(a * a > kMargin, "0 < a^2");
      require(a * a < 1.0 - kMargin, "a^2 < 1");
      require(a * a + b * b > 1.0 + kMargin, "a^2 + b^2 > 1");
      e.params = {{"a", a}, {"b", b}};
      const double t = std::sqrt(a * a + b * b - 1.0);
      const double ra = std::sqrt(1.0 - a * a);
      e.map.eval = [a, b, t, ra](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
        const CJet phase = cexp_i(x * a + y * b);
        const RJet sy = sin(y * t), cy = cos(y * t);
        const CJet L1 =
            phase * (complexify(cy) - sy * std::complex<double>(0.0, b / t)) * (1.0 / ra);
        const CJet L2 = phase * sy * (1.0 / t);
        const CJet L3 = cexp_i(x * (1.0 / a)) * (a / ra);
        return {L1, L2, L3};
      };
      break;
    }
    case 4: {
      // b is unconstrained: a^2 > 1 already keeps a^2 + b^2 - 1 positive.
      require(a * a > 1.0 + kMargin, "a^2 > 1");
      e.params = {{"a", a}, {"b", b}};
      const double t = std::sqrt(a * a + b * b - 1.0);
      const double ra = std::sqrt(a * a - 1.0);
      e.map.eval = [a, b, t, ra](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
        const CJet phase = cexp_i(x * a + y * b);
        const RJet sy = sin(y * t), cy = cos(y * t);
        const CJet L1 = cexp_i(x * (1.0 / a)) * (a / ra);
        const CJet L2 = phase * sy * (1.0 / t);
        const CJet L3 =
            phase * (complexify(cy) - sy * std::complex<double>(0.0, b / t)) * (1.0 / ra);
        return {L1, L2, L3};
      };
      break;
    }
    case 5: {
      require(b * b > kMargin, "b != 0");
      e.params = {{"b", b}};
      const double inv8b2 = 1.0 / (8.0 * b * b);
      e.map.eval = [b, inv8b2](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
        const CJet ex = cexp_i(x);
        const CJet w = complexify(x * (8.0 * b * b) - y * (4.0 * b));  // 8 b^2 x - 4 b y
        const CJet L1 =
            ex * (w + std::complex<double>(0.0, 1.0 + 8.0 * b * b)) * inv8b2;
        const CJet L2 = ex * (w + std::complex<double>(0.0, 1.0)) * inv8b2;
        const CJet L3 = cexp_i(x + y * (2.0 * b)) * (1.0 / (2.0 * b));
        return {L1, L2, L3};
      };
      break;
    }
    case 6: {
      e.map.eval = [](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
        const CJet ex = cexp_i(x);
        const RJet half_y2 = y * y * 0.5;
        const CJet ix = times_i(complexify(x));
        const CJet L1 = ex * (complexify(half_y2) - ix + 1.0);
        const CJet L2 = ex * y;
        const CJet L3 = ex * (complexify(half_y2) - ix);
        return {L1, L2, L3};
      };
      break;
    }
  }
  verify_lift_constraint(e);
  return e;
}

CatalogEntry build_control_graph() {
  CatalogEntry e;
  e.id = "control-graph";
  e.ambient = AmbientSpace::flat_c2();
  e.control = true;
  e.map.ambient = e.ambient;
  e.map.domain = {-2.0, 2.0, -2.0, 2.0};
  // Graph (x, y) -> (x + i u_x, y + i u_y) of u = 0.3 x^3 y.
  e.map.eval = [](const RJet& x, const RJet& y) -> std::array<CJet, 3> {
    const RJet ux = x * x * y * 0.9;
    const RJet uy = x * x * x * 0.3;
    return {complexify(x) + times_i(complexify(ux)),
            complexify(y) + times_i(complexify(uy)), czero(x)};
  };
  e.expected.hamiltonian_stationary = false;
  return e;
}

std::vector<EntrySchema> list_catalog() {
  std::vector<EntrySchema> out;
  out.push_back({"c2-plane", "C2", {}, false});
  out.push_back({"c2-cylinder", "C2", {{"r", "r > 0"}}, false});
  out.push_back({"c2-torus", "C2", {{"r1", "r1 > 0"}, {"r2", "r2 > 0"}}, false});
  out.push_back({"cp2-flat", "CP2", {{"a", "a != 0"}, {"b", "unconstrained"}}, false});
  out.push_back({"ch2-family1",
                 "CH2",
                 {{"a", "a != 0"}, {"b", "a^2 + b^2 < 1"}},
                 false});
  out.push_back({"ch2-family2", "CH2", {{"b", "0 < b^2 < 1"}}, false});
  out.push_back({"ch2-family3",
                 "CH2",
                 {{"a", "0 < a^2 < 1"}, {"b", "a^2 + b^2 > 1"}},
                 false});
  out.push_back({"ch2-family4", "CH2", {{"a", "a^2 > 1"}, {"b", "unconstrained"}}, false});
  out.push_back({"ch2-family5", "CH2", {{"b", "b != 0"}}, false});
  out.push_back({"ch2-family6", "CH2", {}, false});
  out.push_back({"control-graph", "C2", {}, true});
  return out;
}

namespace {

double take(const std::map<std::string, double>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end())
    throw Error(ErrorKind::BadParameter, "missing parameter: " + key);
  return it->second;
}

void reject_extras(const std::map<std::string, double>& params,
                   std::initializer_list<const char*> known) {
  for (const auto& [k, v] : params) {
    bool ok = false;
    for (const char* name : known) ok = ok || k == name;
    if (!ok) throw Error(ErrorKind::BadParameter, "unknown parameter: " + k);
  }
}

}  // namespace

CatalogEntry build_entry(const std::string& id, const std::map<std::string, double>& params) {
  if (id == "c2-plane") {
    reject_extras(params, {});
    return build_c2_plane();
  }
  if (id == "c2-cylinder") {
    reject_extras(params, {"r"});
    return build_c2_cylinder(take(params, "r"));
  }
  if (id == "c2-torus") {
    reject_extras(params, {"r1", "r2"});
    return build_c2_torus(take(params, "r1"), take(params, "r2"));
  }
  if (id == "cp2-flat") {
    reject_extras(params, {"a", "b"});
    return build_cp2_flat(take(params, "a"), take(params, "b"));
  }
  if (id.rfind("ch2-family", 0) == 0 && id.size() == 11) {
    const int k = id[10] - '0';
    if (k == 2 || k == 5) {
      reject_extras(params, {"b"});
      return build_ch2_family(k, 0.0, take(params, "b"));
    }
    if (k == 6) {
      reject_extras(params, {});
      return build_ch2_family(6, 0.0, 0.0);
    }
    reject_extras(params, {"a", "b"});
    return build_ch2_family(k, take(params, "a"), take(params, "b"));
  }
  if (id == "control-graph") {
    reject_extras(params, {});
    return build_control_graph();
  }
  throw Error(ErrorKind::Unsupported, "unknown catalog entry: " + id);
}

}  // namespace hsl
