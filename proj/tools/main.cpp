#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "commands.hpp"

namespace {

// precedence: built-in defaults < config file < command-line flags
void apply_config_file(const std::string& path, const CLI::App& app,
                       gsws::PotentialParams& p, std::string& format) {
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("--config", "cannot open " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw CLI::ValidationError("--config", e.what());
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "v0" && !app.count("--v0")) p.v0 = value.get<double>();
    else if (key == "w0" && !app.count("--w0")) p.w0 = value.get<double>();
    else if (key == "a" && !app.count("--a")) p.a = value.get<double>();
    else if (key == "L" && !app.count("--L")) p.L = value.get<double>();
    else if (key == "mass" && !app.count("--mass")) p.mc2 = value.get<double>();
    else if (key == "hbarc" && !app.count("--hbarc"))
      p.hbarc = value.get<double>();
    else if (key == "format" && !app.count("--format"))
      format = value.get<std::string>();
    else if (key == "v0" || key == "w0" || key == "a" || key == "L" ||
             key == "mass" || key == "hbarc" || key == "format")
      continue;  // present on the command line, flag wins
    else
      throw CLI::ValidationError("--config", "unknown key '" + key + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact scattering, bound and quasi-bound state solver for the "
      "generalized symmetric Woods-Saxon potential"};
  app.require_subcommand(1);
  app.fallthrough();

  gsws_cli::CommonConfig cfg;
  cfg.params.v0 = 100.0;
  cfg.params.w0 = 250.0;
  std::string config_path;
  app.add_option("--v0", cfg.params.v0, "well depth V0 (MeV)");
  app.add_option("--w0", cfg.params.w0, "surface strength W0 (MeV)");
  app.add_option("--a", cfg.params.a, "diffuseness a (fm^-1)");
  app.add_option("--L", cfg.params.L, "half width L (fm)");
  app.add_option("--mass", cfg.params.mc2, "particle rest energy mc^2 (MeV)");
  app.add_option("--hbarc", cfg.params.hbarc, "hbar c (MeV fm)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out, "output path (default: stdout)");
  app.add_option("--config", config_path, "JSON config file with defaults");

  auto* c_pot = app.add_subcommand("potential", "potential profile table");
  double x_min = -15.0, x_max = 15.0;
  int samples = 601;
  std::optional<int> mws_p, mws_q;
  c_pot->add_option("--x-min", x_min, "left edge (fm)");
  c_pot->add_option("--x-max", x_max, "right edge (fm)");
  c_pot->add_option("--samples", samples, "row count");
  c_pot->add_option("--mws-p", mws_p, "add an MWS column with this p");
  c_pot->add_option("--mws-q", mws_q, "add an MWS column with this q");

  auto* c_sc = app.add_subcommand(
      "scatter", "R,T sweep over energy or a potential parameter");
  std::string axis = "energy";
  double s_lo = 0.1, s_hi = 80.0;
  int steps = 500;
  std::optional<double> fixed_energy;
  c_sc->add_option("--axis", axis, "sweep axis")
      ->check(CLI::IsMember({"energy", "v0", "w0", "a", "L"}));
  c_sc->add_option("--min", s_lo, "axis lower edge");
  c_sc->add_option("--max", s_hi, "axis upper edge");
  c_sc->add_option("--steps", steps, "row count");
  c_sc->add_option("--energy", fixed_energy,
                   "incident energy (MeV), required for non-energy axes");

  auto* c_res =
      app.add_subcommand("resonances", "transmission resonance energies");
  double r_lo = 1e-3, r_hi = 60.0;
  c_res->add_option("--min", r_lo, "window lower edge (MeV)");
  c_res->add_option("--max", r_hi, "window upper edge (MeV)");

  auto* c_b = app.add_subcommand("bound", "bound spectrum table");
  std::string b_parity = "both";
  bool b_dump = false, b_normalize = false;
  int b_samples = 801;
  c_b->add_option("--parity", b_parity)
      ->check(CLI::IsMember({"even", "odd", "both"}));
  c_b->add_flag("--dump-wavefunctions", b_dump, "emit per-state tables");
  c_b->add_option("--x-samples", b_samples, "wavefunction sample count");
  c_b->add_flag("--normalize", b_normalize,
                "L2-normalize dumped wavefunctions (default: unnormalized)");

  auto* c_qb = app.add_subcommand("quasibound", "quasi-bound state table");
  std::string q_parity = "both";
  bool q_dump = false;
  int q_samples = 801;
  double q_lo = 1.0, q_hi = 60.0;
  c_qb->add_option("--parity", q_parity)
      ->check(CLI::IsMember({"even", "odd", "both"}));
  c_qb->add_option("--min", q_lo, "window lower edge (MeV)");
  c_qb->add_option("--max", q_hi, "window upper edge (MeV)");
  c_qb->add_flag("--dump-wavefunctions", q_dump, "emit per-state tables");
  c_qb->add_option("--x-samples", q_samples, "wavefunction sample count");

  auto* c_v = app.add_subcommand(
      "verify", "oracle-vs-analytic checks and invariants (exit 3 on failure)");
  bool negative_control = false, quick = false;
  c_v->add_flag("--negative-control", negative_control,
                "corrupt the theta branch; the invariance check must fail");
  c_v->add_flag("--quick", quick, "smaller grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit code 1
  }

  try {
    if (!config_path.empty())
      apply_config_file(config_path, app, cfg.params, cfg.format);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    cfg.params.validate();
    if (!cfg.params.asymptotics_ok())
      std::cerr << "warning: a*L = " << cfg.params.a * cfg.params.L
                << " < 5; the closed-form matching degrades at small a*L\n";

    if (c_pot->parsed())
      return gsws_cli::cmd_potential(cfg, x_min, x_max, samples, mws_p, mws_q);
    if (c_sc->parsed()) {
      if (axis != "energy" && !fixed_energy) {
        std::cerr << "error: --energy is required for axis " << axis << "\n";
        return 1;
      }
      return gsws_cli::cmd_scatter(cfg, axis, s_lo, s_hi, steps, fixed_energy);
    }
    if (c_res->parsed()) return gsws_cli::cmd_resonances(cfg, r_lo, r_hi);
    if (c_b->parsed())
      return gsws_cli::cmd_bound(cfg, b_parity, b_dump, b_samples,
                                 b_normalize);
    if (c_qb->parsed())
      return gsws_cli::cmd_quasibound(cfg, q_parity, q_lo, q_hi, q_dump,
                                      q_samples);
    if (c_v->parsed()) return gsws_cli::cmd_verify(cfg, negative_control, quick);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
