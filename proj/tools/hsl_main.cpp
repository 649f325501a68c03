// hsl: verification front door for the Hamiltonian stationary Lagrangian
// surface catalog.
//
// Subcommands: list | verify | sweep | dump-fields | variation
// Exit codes:  0 pass, 1 check failure, 2 bad parameter / unsupported,
//              3 numerical abort, 4 I/O.

#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hsl/catalog.hpp"
#include "hsl/checks.hpp"
#include "hsl/report_json.hpp"
#include "hsl/variation.hpp"

namespace {

// Shortest round-trip formatting, locale independent.
std::string fmt(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw hsl::Error(hsl::ErrorKind::BadParameter, "--param expects k=v, got: " + kv);
    const std::string key = kv.substr(0, eq);
    try {
      out[key] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw hsl::Error(hsl::ErrorKind::BadParameter, "--param value is not a number: " + kv);
    }
  }
  return out;
}

std::pair<int, int> parse_grid(const std::string& s) {
  const auto x = s.find('x');
  if (x == std::string::npos)
    throw hsl::Error(hsl::ErrorKind::BadParameter, "--grid expects NxM, got: " + s);
  try {
    return {std::stoi(s.substr(0, x)), std::stoi(s.substr(x + 1))};
  } catch (const std::exception&) {
    throw hsl::Error(hsl::ErrorKind::BadParameter, "--grid expects NxM, got: " + s);
  }
}

hsl::Rect parse_domain(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      v.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw hsl::Error(hsl::ErrorKind::BadParameter, "--domain expects x0:x1:y0:y1");
    }
  }
  if (v.size() != 4 || !(v[0] < v[1]) || !(v[2] < v[3]))
    throw hsl::Error(hsl::ErrorKind::BadParameter, "--domain expects x0:x1:y0:y1 with x0<x1, y0<y1");
  return {v[0], v[1], v[2], v[3]};
}

struct Range {
  std::string name;
  double start, stop, step;
};

Range parse_range(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos)
    throw hsl::Error(hsl::ErrorKind::BadParameter, "--range expects k=start:stop:step");
  Range r;
  r.name = s.substr(0, eq);
  std::vector<double> v;
  std::stringstream ss(s.substr(eq + 1));
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    try {
      v.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw hsl::Error(hsl::ErrorKind::BadParameter, "--range expects k=start:stop:step");
    }
  }
  if (v.size() != 3)
    throw hsl::Error(hsl::ErrorKind::BadParameter, "--range expects k=start:stop:step");
  r.start = v[0];
  r.stop = v[1];
  r.step = v[2];
  if (r.step == 0.0)
    throw hsl::Error(hsl::ErrorKind::BadParameter, "--range step must be nonzero");
  if ((r.stop - r.start) / r.step < 0.0)
    throw hsl::Error(hsl::ErrorKind::BadParameter, "--range step sign does not reach stop");
  return r;
}

std::vector<double> expand(const Range& r) {
  std::vector<double> out;
  const int n = int(std::floor((r.stop - r.start) / r.step + 1e-9));
  for (int k = 0; k <= n; ++k) out.push_back(r.start + k * r.step);
  return out;
}

void write_text(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw hsl::Error(hsl::ErrorKind::Io, "cannot open for writing: " + path);
  f << body;
  if (!f) throw hsl::Error(hsl::ErrorKind::Io, "write failed: " + path);
}

struct CommonOpts {
  std::string entry;
  std::vector<std::string> params;
  std::string grid = "41x41";
  std::string domain;
  std::string profile = "default";
  std::string out;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_entry = true) {
  auto* e = cmd->add_option("--entry", o.entry, "catalog entry id");
  if (needs_entry) e->required();
  cmd->add_option("--param", o.params, "entry parameter k=v (repeatable)");
  cmd->add_option("--grid", o.grid, "sample grid NxM (default 41x41)");
  cmd->add_option("--domain", o.domain, "window override x0:x1:y0:y1");
  cmd->add_option("--profile", o.profile, "tolerance profile: strict|default|sweep")
      ->envname("HSL_PROFILE");
  cmd->add_option("--out", o.out, "output path ('-' or empty: stdout)");
  cmd->add_option("--seed", o.seed, "seed echoed into the report");
  cmd->add_flag("--timing", o.timing, "record wall time in the report (breaks byte-stable output)");
}

hsl::CatalogEntry build_from(const CommonOpts& o) {
  auto entry = hsl::build_entry(o.entry, parse_params(o.params));
  if (!o.domain.empty()) entry.map.domain = parse_domain(o.domain);
  return entry;
}

int cmd_list() {
  for (const auto& schema : hsl::list_catalog()) {
    std::cout << schema.id << " [" << schema.ambient << "]";
    if (schema.control) std::cout << " (control surface)";
    if (!schema.params.empty()) {
      std::cout << ": ";
      for (size_t i = 0; i < schema.params.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << schema.params[i].name;
        if (schema.params[i].constraint != "unconstrained")
          std::cout << " with " << schema.params[i].constraint;
      }
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const CommonOpts& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto entry = build_from(o);
  const auto [nx, ny] = parse_grid(o.grid);
  auto report = hsl::run_checks(entry, nx, ny, hsl::ToleranceProfile::by_name(o.profile));
  report.seed = o.seed;
  if (o.timing) {
    const auto t1 = std::chrono::steady_clock::now();
    report.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  }
  write_text(o.out, hsl::report_to_string(report));
  for (const auto& c : report.checks)
    if (!c.pass)
      std::cerr << "check failed: " << c.name << " residual " << fmt(c.sup_residual)
                << " tolerance " << fmt(c.tolerance) << "\n";
  return report.overall_pass ? 0 : 1;
}

int cmd_sweep(const CommonOpts& o, const std::vector<std::string>& range_args) {
  if (range_args.empty())
    throw hsl::Error(hsl::ErrorKind::BadParameter, "sweep needs at least one --range");
  std::vector<Range> ranges;
  for (const auto& s : range_args) ranges.push_back(parse_range(s));
  const auto fixed = parse_params(o.params);
  const auto [nx, ny] = parse_grid(o.grid);
  const auto profile = hsl::ToleranceProfile::by_name(o.profile);

  std::vector<std::vector<double>> values;
  for (const auto& r : ranges) values.push_back(expand(r));

  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  std::map<std::string, double> worst_per_check;
  int n_pass = 0, n_fail = 0, n_skipped = 0;

  std::vector<size_t> idx(ranges.size(), 0);
  bool done = false;
  while (!done) {
    std::map<std::string, double> params = fixed;
    nlohmann::ordered_json jparams = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fixed) jparams[k] = v;
    for (size_t i = 0; i < ranges.size(); ++i) {
      params[ranges[i].name] = values[i][idx[i]];
      jparams[ranges[i].name] = values[i][idx[i]];
    }
    nlohmann::ordered_json row;
    row["params"] = jparams;
    try {
      const auto entry = hsl::build_entry(o.entry, params);
      const auto report = hsl::run_checks(entry, nx, ny, profile);
      double worst_ratio = 0.0;
      std::string worst_name;
      for (const auto& c : report.checks) {
        const double ratio = std::abs(c.sup_residual) / c.tolerance;
        if (ratio >= worst_ratio) {
          worst_ratio = ratio;
          worst_name = c.name;
        }
        auto it = worst_per_check.find(c.name);
        if (it == worst_per_check.end() || c.sup_residual > it->second)
          worst_per_check[c.name] = c.sup_residual;
      }
      row["status"] = report.overall_pass ? "pass" : "fail";
      row["worst_check"] = worst_name;
      (report.overall_pass ? n_pass : n_fail) += 1;
    } catch (const hsl::Error& err) {
      if (err.kind() != hsl::ErrorKind::BadParameter) throw;
      row["status"] = "skipped";
      row["violated_clause"] = err.what();
      ++n_skipped;
    }
    results.push_back(row);

    done = true;
    for (size_t i = ranges.size(); i-- > 0;) {
      if (++idx[i] < values[i].size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
  }

  if (n_pass + n_fail == 0)
    throw hsl::Error(hsl::ErrorKind::BadParameter, "sweep produced no valid parameter tuples");

  nlohmann::ordered_json j;
  j["entry"] = o.entry;
  j["grid"] = {nx, ny};
  j["profile"] = profile.name;
  j["counts"] = {{"pass", n_pass}, {"fail", n_fail}, {"skipped", n_skipped}};
  nlohmann::ordered_json worst = nlohmann::ordered_json::object();
  for (const auto& [k, v] : worst_per_check) worst[k] = v;
  j["worst_residual_per_check"] = worst;
  j["results"] = results;
  write_text(o.out, j.dump(2) + "\n");
  return n_fail == 0 ? 0 : 1;
}

int cmd_dump_fields(const CommonOpts& o) {
  const auto entry = build_from(o);
  const auto [nx, ny] = parse_grid(o.grid);
  if (nx < 2 || ny < 2)
    throw hsl::Error(hsl::ErrorKind::GridTooCoarse, "dump-fields needs at least a 2x2 grid");
  const hsl::GridSpec grid{nx, ny, entry.map.domain};
  std::ostringstream csv;
  csv << "x,y,K,absH,deltaAlpha,dAlpha,nablaPerpH_norm,nablaA_norm,rhoN\r\n";
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix) {
      const auto p = hsl::analyze_point(entry.map, grid.x(ix), grid.y(iy));
      csv << fmt(p.x) << ',' << fmt(p.y) << ',' << fmt(p.K_intrinsic) << ',' << fmt(p.absH)
          << ',' << fmt(p.delta_alpha) << ',' << fmt(p.d_alpha) << ','
          << fmt(p.nabla_perp_H_norm) << ',' << fmt(p.nabla_A_norm) << ',' << fmt(p.rho_N)
          << "\r\n";
    }
  write_text(o.out, csv.str());
  return 0;
}

int cmd_variation(const CommonOpts& o, int bumps) {
  const auto entry = build_from(o);
  if (entry.ambient.lifted())
    throw hsl::Error(hsl::ErrorKind::Unsupported,
                     "the variation oracle is defined for C2 entries only");
  const std::uint64_t seed = o.seed.value_or(0);
  const auto bump_list = hsl::seeded_bumps(entry.map, bumps, seed);
  nlohmann::ordered_json jb = nlohmann::ordered_json::array();
  double max_abs = 0.0;
  for (const auto& b : bump_list) {
    const double fv = hsl::first_variation(entry.map, b);
    max_abs = std::max(max_abs, std::abs(fv));
    nlohmann::ordered_json e;
    e["center"] = {b.x0, b.y0};
    e["radius"] = b.radius;
    e["amplitude"] = b.amplitude;
    e["first_variation"] = fv;
    jb.push_back(e);
  }
  const bool pass = max_abs < 1e-6;
  nlohmann::ordered_json j;
  j["entry"] = o.entry;
  nlohmann::ordered_json jparams = nlohmann::ordered_json::object();
  for (const auto& [k, v] : entry.params) jparams[k] = v;
  j["params"] = jparams;
  j["bumps"] = jb;
  j["max_abs_first_variation"] = max_abs;
  j["pass"] = pass;
  j["seed"] = seed;
  write_text(o.out, j.dump(2) + "\n");
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hsl: numerical verification of Hamiltonian stationary Lagrangian surfaces"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML config mirroring the flag set (flags win)");

  auto* list = app.add_subcommand("list", "print catalog entries and their parameter constraints");

  CommonOpts vo;
  auto* verify = app.add_subcommand("verify", "run the check suite on one entry");
  add_common(verify, vo);

  CommonOpts so;
  std::vector<std::string> range_args;
  auto* sweep = app.add_subcommand("sweep", "run the check suite over parameter ranges");
  add_common(sweep, so);
  sweep->add_option("--range", range_args, "swept parameter k=start:stop:step (repeatable)");

  CommonOpts fo;
  auto* dump = app.add_subcommand("dump-fields", "write per-node geometry fields as CSV");
  add_common(dump, fo);

  CommonOpts ao;
  int bumps = 5;
  auto* variation = app.add_subcommand("variation", "first-variation oracle (C2 entries)");
  add_common(variation, ao);
  variation->add_option("--bumps", bumps, "number of seeded bumps (default 5)");

  try {
    app.parse(argc, argv);
    if (list->parsed()) return cmd_list();
    if (verify->parsed()) return cmd_verify(vo);
    if (sweep->parsed()) return cmd_sweep(so, range_args);
    if (dump->parsed()) return cmd_dump_fields(fo);
    if (variation->parsed()) return cmd_variation(ao, bumps);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const hsl::Error& e) {
    std::cerr << "error [" << hsl::error_kind_name(e.kind()) << "]: " << e.what() << "\n";
    return hsl::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
