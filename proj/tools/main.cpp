#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtq/algebra.hpp"
#include "gtq/operators.hpp"
#include "gtq/verify.hpp"

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed,
                const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw std::invalid_argument("unknown config key: " + where + key);
    }
  }
}

// Strict config loader: unknown keys anywhere are rejected.
void apply_config_file(const std::string& path, gtq::verify::SuiteConfig& cfg) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot read config file: " + path);
  }
  json doc = json::parse(in);
  if (!doc.is_object()) {
    throw std::invalid_argument("config root must be a JSON object");
  }
  check_keys(doc, {"seed", "trials", "tolerances", "grid", "rep", "heis"}, "");

  if (doc.contains("seed")) cfg.seed = doc["seed"].get<std::uint64_t>();
  if (doc.contains("trials")) {
    cfg.trials = doc["trials"].get<int>();
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  }
  if (doc.contains("tolerances")) {
    for (const auto& [key, value] : doc["tolerances"].items()) {
      if (!gtq::verify::default_tolerances().contains(key)) {
        throw std::invalid_argument("unknown config key: tolerances." + key);
      }
      const double tol = value.get<double>();
      if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerances." + key + " must be positive");
      }
      cfg.tolerances[key] = tol;
    }
  }
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    check_keys(g, {"n_phi", "n_s", "s_min", "s_max"}, "grid.");
    gtq::hilbert::GridSpec spec = cfg.grid;
    if (g.contains("n_phi")) spec.n_phi = g["n_phi"].get<int>();
    if (g.contains("n_s")) spec.n_s = g["n_s"].get<int>();
    if (g.contains("s_min")) spec.s_min = g["s_min"].get<double>();
    if (g.contains("s_max")) spec.s_max = g["s_max"].get<double>();
    cfg.grid = gtq::hilbert::make_grid(spec.n_phi, spec.n_s, spec.s_min, spec.s_max);
  }
  if (doc.contains("rep")) {
    const json& r = doc["rep"];
    check_keys(r, {"hbar", "alpha", "shift_mode"}, "rep.");
    if (r.contains("hbar")) cfg.rep.hbar = r["hbar"].get<double>();
    if (r.contains("alpha")) cfg.rep.alpha = r["alpha"].get<double>();
    if (r.contains("shift_mode")) {
      const std::string mode = r["shift_mode"].get<std::string>();
      if (mode == "exact_aligned") {
        cfg.rep.shift_mode = gtq::operators::ShiftMode::ExactAligned;
      } else if (mode == "spectral") {
        cfg.rep.shift_mode = gtq::operators::ShiftMode::Spectral;
      } else {
        throw std::invalid_argument("rep.shift_mode must be exact_aligned or spectral");
      }
    }
    if (!(cfg.rep.hbar > 0.0)) throw std::invalid_argument("rep.hbar must be positive");
  }
  if (doc.contains("heis")) {
    const json& h = doc["heis"];
    check_keys(h, {"mu", "n", "box_half_width"}, "heis.");
    if (h.contains("mu")) cfg.heis.mu = h["mu"].get<double>();
    if (cfg.heis.mu == 0.0) throw std::invalid_argument("heis.mu must be nonzero");
    gtq::hilbert::BoxGridSpec box = cfg.heis.box;
    if (h.contains("n")) box.n = h["n"].get<int>();
    if (h.contains("box_half_width")) box.half_width = h["box_half_width"].get<double>();
    cfg.heis.box = gtq::hilbert::make_box_grid(box.n, box.half_width);
  }
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open " + tmp + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::invalid_argument("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::invalid_argument("cannot rename " + tmp + " to " + path);
  }
}

// Output paths are config; reject unwritable ones before the suites run.
void require_writable(const std::string& path) {
  const std::string tmp = path + ".tmp";
  std::ofstream probe(tmp, std::ios::binary | std::ios::trunc);
  if (!probe) {
    throw std::invalid_argument("output path is not writable: " + path);
  }
  probe.close();
  std::remove(tmp.c_str());
}

int cmd_verify(const gtq::verify::SuiteConfig& cfg,
               const std::vector<std::string>& suites,
               const std::string& json_path) {
  if (!json_path.empty()) {
    require_writable(json_path);
  }
  const std::vector<std::string> names =
      suites.empty() ? gtq::verify::suite_names() : suites;
  const gtq::verify::RunResult result = gtq::verify::run_selected(cfg, names);

  std::printf("%-24s %8s %14s %12s  %s\n", "suite", "trials", "max_residual",
              "tolerance", "status");
  for (const auto& rep : result.reports) {
    std::printf("%-24s %8d %14.4e %12.1e  %s\n", rep.suite.c_str(), rep.trials,
                rep.max_residual, rep.tolerance, rep.passed ? "pass" : "FAIL");
  }
  std::printf("%zu suite(s) in %.2f s: %s\n", result.reports.size(),
              result.wall_seconds, result.all_passed ? "all passed" : "FAILURES");

  if (!json_path.empty()) {
    atomic_write(json_path, gtq::verify::reports_to_json(result.reports));
  }
  return result.all_passed ? 0 : 1;
}

int cmd_spectrum(const std::string& op_name, double alpha, double hbar,
                 int n_phi, const std::string& csv_path) {
  if (op_name != "pi1") {
    std::cerr << "spectrum: unsupported operator '" << op_name
              << "' (only pi1 has a discrete angular spectrum here)\n";
    return 2;
  }
  gtq::operators::RepConfig rep;
  rep.hbar = hbar;
  rep.alpha = alpha;
  // Eigenvalues come from the angular modes; a thin s direction suffices.
  const auto grid = gtq::hilbert::make_grid(n_phi, 8, -4.0, 4.0);
  const auto spectrum = gtq::operators::pi1_spectrum(rep, grid);

  std::ostringstream out;
  out << "n,eigenvalue\n";
  char line[64];
  for (const auto& [n, eig] : spectrum) {
    std::snprintf(line, sizeof(line), "%d,%.17g\n", n, eig);
    out << line;
  }
  if (csv_path.empty()) {
    std::cout << out.str();
  } else {
    atomic_write(csv_path, out.str());
  }
  return 0;
}

std::string format_element(const gtq::algebra::AlgebraElement& a) {
  const std::pair<double, const char*> comps[] = {
      {a.b1, "e_b1"}, {a.b2, "e_b2"}, {a.theta, "e_theta"}, {a.r, "e_r"}};
  std::string out;
  for (const auto& [c, name] : comps) {
    if (c == 0.0) continue;
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (std::abs(c) != 1.0) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.3g ", std::abs(c));
      out += buf;
    }
    out += name;
  }
  return out.empty() ? "0" : out;
}

int cmd_info() {
  std::cout <<
      "canonical group  G = R^2 x| (SO(2) x R+), universal cover R^2 x| (R x R+)\n"
      "group product    (u, th, la)(u', th', la') = (u + la^-1 A_th u', th + th', la la')\n"
      "phase action     (u, th, la) . (x, p) = (la A_th x, la^-1 A_th p - u)\n"
      "\n"
      "bracket table on the basis e_b1, e_b2, e_theta, e_r:\n";
  const gtq::algebra::AlgebraElement basis[] = {
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const char* names[] = {"e_b1", "e_b2", "e_theta", "e_r"};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      std::cout << "  [" << names[i] << ", " << names[j] << "] = "
                << format_element(gtq::algebra::bracket(basis[i], basis[j]))
                << "\n";
    }
  }
  std::cout <<
      "\n"
      "quantization dictionary (log-polar grid, s = ln rho):\n"
      "  e_b1    -> c    : multiplication by rho cos(phi)\n"
      "  e_b2    -> s    : multiplication by rho sin(phi)\n"
      "  e_theta -> pi1  : -i hbar d/dphi + hbar alpha\n"
      "  e_r     -> pi2  : -i hbar rho d/drho = -i hbar d/ds\n"
      "momentum map     P_(b,theta,r) = r x.p + b.x + theta x.Cp\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for canonical-group quantization of "
               "the plane and the punctured plane"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run property suites");
  std::vector<std::string> suites;
  std::string config_path;
  std::string json_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  verify->add_option("--suite", suites, "suite name (repeatable; default all)");
  verify->add_option("--config", config_path, "JSON config file");
  verify->add_option("--seed", seed, "override the random seed")
      ->each([&seed_given](const std::string&) { seed_given = true; });
  verify->add_option("--json", json_path, "write the JSON report here");

  auto* spectrum = app.add_subcommand("spectrum", "tabulate operator spectra");
  std::string op_name;
  double alpha = 0.0;
  double hbar = 1.0;
  int n_phi = 256;
  std::string csv_path;
  spectrum->add_option("--operator", op_name, "operator name")->required();
  spectrum->add_option("--alpha", alpha, "twist parameter");
  spectrum->add_option("--hbar", hbar, "Planck constant");
  spectrum->add_option("--nphi", n_phi, "angular grid size");
  spectrum->add_option("--csv", csv_path, "write CSV here (default stdout)");

  auto* info = app.add_subcommand("info", "print the group law and dictionary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      gtq::verify::SuiteConfig cfg = gtq::verify::default_config();
      if (!config_path.empty()) {
        apply_config_file(config_path, cfg);
      }
      if (seed_given) {
        cfg.seed = seed;  // flags beat the config file
      }
      for (const std::string& name : suites) {
        const auto known = gtq::verify::suite_names();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
          std::cerr << "unknown suite: " << name << "\n";
          return 2;
        }
      }
      return cmd_verify(cfg, suites, json_path);
    }
    if (spectrum->parsed()) {
      if (!(hbar > 0.0)) {
        std::cerr << "spectrum: hbar must be positive\n";
        return 2;
      }
      return cmd_spectrum(op_name, alpha, hbar, n_phi, csv_path);
    }
    if (info->parsed()) {
      return cmd_info();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad config: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "bad config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
