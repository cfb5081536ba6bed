// Command-line front end: parse a system description, compute internal-mode
// frequencies, energies, level tables, closed-form condition reports, or run
// the independent normal-mode verification.
//
// Exit codes: 0 success, 1 physics failure (unstable spectrum, verification
// mismatch), 2 input error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nbho/nbho.hpp"

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct SpectrumResult {
  nbho::Spectrum spectrum;
  std::string method;  // "analytic" or "numeric"
};

// Analytic path when the closed-form conditions cover every coupling,
// numeric diagonalization otherwise. When the analytic path is taken the
// numeric one is still run and the two must agree.
SpectrumResult compute_spectrum(const nbho::ParticleSystem& sys, double tol,
                                bool force_numeric) {
  nbho::Spectrum numeric =
      nbho::spectrum_from_j(nbho::build_J(sys), sys);
  if (!force_numeric) {
    const nbho::AnalyticCondition cond = nbho::detect(sys, tol);
    if (cond.closed_form_applies(sys)) {
      std::vector<double> omega = nbho::analytic_frequencies(sys, cond);
      std::sort(omega.begin(), omega.end());
      double dev = 0.0;
      for (std::size_t i = 0; i < omega.size(); ++i)
        dev = std::max(dev, std::abs(omega[i] - numeric.omega[i]) /
                                numeric.omega[i]);
      if (dev > 1e-10) throw nbho::MismatchError(dev);
      nbho::Spectrum spec;
      spec.mass_scale = sys.mass_scale();
      spec.omega = omega;
      for (double w : omega) spec.d.push_back(0.5 * spec.mass_scale * w * w);
      return {spec, "analytic"};
    }
  }
  return {numeric, "numeric"};
}

void print_frequencies(const SpectrumResult& r, const std::string& format) {
  if (format == "csv") {
    std::cout << "mode,omega,d\n";
    for (std::size_t i = 0; i < r.spectrum.omega.size(); ++i)
      std::cout << i + 1 << "," << fmt17(r.spectrum.omega[i]) << ","
                << fmt17(r.spectrum.d[i]) << "\n";
    return;
  }
  json out;
  out["omega"] = r.spectrum.omega;
  out["d"] = r.spectrum.d;
  out["method"] = r.method;
  std::cout << out.dump(2) << "\n";
}

json condition_to_json(const nbho::AnalyticCondition& cond) {
  json out;
  out["tolerance"] = cond.tolerance;
  out["one_body_rho"] =
      cond.one_body_rho ? json(*cond.one_body_rho) : json(nullptr);
  out["two_body_row"] =
      cond.two_body_row ? json(*cond.two_body_row) : json(nullptr);
  out["product_beta"] =
      cond.product_beta ? json(*cond.product_beta) : json(nullptr);
  return out;
}

struct RandomSystemParams {
  int n_min = 2, n_max = 8;
};

nbho::ParticleSystem random_system(std::mt19937_64& rng,
                                   const RandomSystemParams& p) {
  std::uniform_int_distribution<int> n_dist(p.n_min, p.n_max);
  std::uniform_real_distribution<double> log_mass(std::log(0.1),
                                                  std::log(10.0));
  std::uniform_real_distribution<double> k_dist(0.0, 2.0);
  std::uniform_real_distribution<double> g_dist(0.1, 2.0);

  nbho::SystemInput in;
  in.dimension = 3;
  const int n = n_dist(rng);
  for (int i = 0; i < n; ++i) in.masses.push_back(std::exp(log_mass(rng)));
  for (int i = 0; i < n; ++i) in.one_body.push_back(k_dist(rng));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) in.two_body.push_back({i, j, g_dist(rng)});
  return nbho::validate_system(in);
}

int run_verify_random(int count, std::uint64_t seed, double tol,
                      const std::string& format) {
  std::mt19937_64 rng(seed);
  int failures = 0;
  double worst = 0.0;
  for (int t = 0; t < count; ++t) {
    const nbho::ParticleSystem sys = random_system(rng, {});
    const nbho::Spectrum spec = nbho::spectrum_from_j(nbho::build_J(sys), sys);
    try {
      const nbho::NormalModeReport rep = nbho::cross_check(sys, spec, tol);
      worst = std::max(worst, rep.max_relative_deviation);
    } catch (const nbho::MismatchError& e) {
      ++failures;
      worst = std::max(worst, e.max_relative_deviation());
    }
  }
  if (format == "csv") {
    std::cout << "systems,failures,max_relative_deviation\n"
              << count << "," << failures << "," << fmt17(worst) << "\n";
  } else {
    json out;
    out["systems"] = count;
    out["failures"] = failures;
    out["max_relative_deviation"] = worst;
    out["pass"] = failures == 0;
    std::cout << out.dump(2) << "\n";
  }
  return failures == 0 ? 0 : 1;
}

void emit_error(const std::string& code, const std::string& what) {
  json out;
  out["error"] = code;
  out["message"] = what;
  std::cout << out.dump(2) << "\n";
  std::cerr << what << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectrum of the translation-invariant N-body harmonic "
               "oscillator with one-body and two-body forces"};
  app.require_subcommand(1);

  std::string system_path;
  std::string format = "json";
  double tol = 1e-9;
  bool force_numeric = false;
  double e_max = 0.0;
  int random_count = 0;
  std::uint64_t seed = 0;

  const auto add_common = [&](CLI::App* cmd, bool path_required = true) {
    cmd->add_option("system", system_path, "system description file")
        ->required(path_required);
    cmd->add_option("--tol", tol, "relative detection tolerance");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* freq = app.add_subcommand("frequencies",
                                      "internal-mode frequencies omega_i");
  add_common(freq);
  freq->add_flag("--numeric", force_numeric, "bypass the analytic path");

  CLI::App* energy_cmd =
      app.add_subcommand("energy", "energies of the states listed in the file");
  add_common(energy_cmd);
  energy_cmd->add_flag("--numeric", force_numeric, "bypass the analytic path");

  CLI::App* levels_cmd =
      app.add_subcommand("levels", "energy levels with degeneracies");
  add_common(levels_cmd);
  levels_cmd->add_flag("--numeric", force_numeric, "bypass the analytic path");
  levels_cmd->add_option("--emax", e_max, "energy cutoff")->required();

  CLI::App* detect_cmd =
      app.add_subcommand("detect", "probe the closed-form coupling conditions");
  add_common(detect_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "cross-check against full-coordinate normal modes");
  add_common(verify_cmd, /*path_required=*/false);
  verify_cmd->add_option("--random", random_count,
                         "verify this many random systems instead of a file");
  verify_cmd->add_option("--seed", seed, "random seed for --random");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (freq->parsed()) {
      const nbho::ParticleSystem sys = nbho::parse_system_file(system_path);
      print_frequencies(compute_spectrum(sys, tol, force_numeric), format);
    } else if (energy_cmd->parsed()) {
      const nbho::SystemDocument doc =
          nbho::parse_system_document_file(system_path);
      const nbho::ParticleSystem sys = nbho::validate_system(doc.input);
      if (doc.states.empty())
        throw nbho::InputError("ParseError",
                               "energy command needs a \"states\" array");
      const SpectrumResult r = compute_spectrum(sys, tol, force_numeric);
      std::vector<double> energies;
      for (const nbho::QuantumState& st : doc.states) {
        nbho::validate_state(st, sys);
        energies.push_back(nbho::energy(r.spectrum, st, sys.dimension()));
      }
      if (format == "csv") {
        std::cout << "state,energy\n";
        for (std::size_t i = 0; i < energies.size(); ++i)
          std::cout << i + 1 << "," << fmt17(energies[i]) << "\n";
      } else {
        json out;
        out["energies"] = energies;
        out["method"] = r.method;
        std::cout << out.dump(2) << "\n";
      }
    } else if (levels_cmd->parsed()) {
      const nbho::ParticleSystem sys = nbho::parse_system_file(system_path);
      const SpectrumResult r = compute_spectrum(sys, tol, force_numeric);
      const std::vector<nbho::EnergyLevel> levels =
          nbho::enumerate_levels(r.spectrum, sys.dimension(), e_max);
      if (format == "csv") {
        std::cout << "energy,degeneracy,quanta\n";
        for (const nbho::EnergyLevel& lv : levels) {
          std::cout << fmt17(lv.energy) << "," << lv.degeneracy << ",";
          for (std::size_t i = 0; i < lv.quanta.size(); ++i)
            std::cout << (i ? ";" : "") << lv.quanta[i];
          std::cout << "\n";
        }
      } else {
        json out = json::array();
        for (const nbho::EnergyLevel& lv : levels)
          out.push_back({{"energy", lv.energy},
                         {"degeneracy", lv.degeneracy},
                         {"quanta", lv.quanta}});
        std::cout << out.dump(2) << "\n";
      }
    } else if (detect_cmd->parsed()) {
      const nbho::ParticleSystem sys = nbho::parse_system_file(system_path);
      const nbho::AnalyticCondition cond = nbho::detect(sys, tol);
      if (format == "csv") {
        std::cout << "field,value\n";
        std::cout << "one_body_rho,"
                  << (cond.one_body_rho ? fmt17(*cond.one_body_rho) : "") << "\n";
        std::cout << "product_beta,"
                  << (cond.product_beta ? fmt17(*cond.product_beta) : "") << "\n";
      } else {
        std::cout << condition_to_json(cond).dump(2) << "\n";
      }
    } else if (verify_cmd->parsed()) {
      if (random_count > 0)
        return run_verify_random(random_count, seed, tol, format);
      if (system_path.empty())
        throw nbho::InputError("ParseError",
                               "verify needs a system file or --random N");
      const nbho::ParticleSystem sys = nbho::parse_system_file(system_path);
      const nbho::Spectrum spec =
          nbho::spectrum_from_j(nbho::build_J(sys), sys);
      const nbho::NormalModeReport rep = nbho::cross_check(sys, spec, tol);
      if (format == "csv") {
        std::cout << "pass,max_relative_deviation,zero_modes\n"
                  << "1," << fmt17(rep.max_relative_deviation) << ","
                  << rep.zero_modes << "\n";
      } else {
        json out;
        out["pass"] = true;
        out["max_relative_deviation"] = rep.max_relative_deviation;
        out["zero_modes"] = rep.zero_modes;
        out["omega"] = rep.omega_oracle;
        std::cout << out.dump(2) << "\n";
      }
    }
  } catch (const nbho::PhysicsError& e) {
    emit_error(e.code(), e.what());
    return 1;
  } catch (const nbho::InputError& e) {
    emit_error(e.code(), e.what());
    return 2;
  }
  return 0;
}
