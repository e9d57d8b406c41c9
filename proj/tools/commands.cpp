#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <vector>

#include "gsws/resonance.hpp"
#include "gsws/scattering.hpp"
#include "gsws/spectrum.hpp"
#include "gsws/verify.hpp"
#include "table.hpp"

namespace gsws_cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::vector<std::pair<std::string, double>> echo_params(
    const gsws::PotentialParams& p) {
  return {{"v0", p.v0},   {"w0", p.w0},     {"a", p.a},
          {"L", p.L},     {"mass", p.mc2},  {"hbarc", p.hbarc}};
}

std::string label_of(gsws::Parity parity, int index) {
  return (parity == gsws::Parity::kEven ? "even" : "odd") +
         std::to_string(index);
}

// main table plus optional per-state wavefunction tables; CSV splits the
// wavefunctions into sibling files when writing to a path
void emit(const CommonConfig& cfg, const Table& main,
          const std::vector<Table>& wavefunctions = {}) {
  if (cfg.format == "json") {
    if (cfg.out.empty()) {
      write_json(main, wavefunctions, std::cout);
    } else {
      std::ofstream os(cfg.out);
      if (!os) throw std::runtime_error("cannot open " + cfg.out);
      write_json(main, wavefunctions, os);
    }
    return;
  }
  if (cfg.out.empty()) {
    write_csv(main, std::cout);
    for (const auto& t : wavefunctions) {
      std::cout << "\n";
      write_csv(t, std::cout);
    }
    return;
  }
  std::ofstream os(cfg.out);
  if (!os) throw std::runtime_error("cannot open " + cfg.out);
  write_csv(main, os);
  const auto dot = cfg.out.rfind('.');
  const std::string stem = dot == std::string::npos ? cfg.out : cfg.out.substr(0, dot);
  const std::string ext = dot == std::string::npos ? "" : cfg.out.substr(dot);
  for (const auto& t : wavefunctions) {
    const std::string path = stem + "_wf_" + t.command + ext;
    std::ofstream ws(path);
    if (!ws) throw std::runtime_error("cannot open " + path);
    write_csv(t, ws);
  }
}

Table wavefunction_table(const std::string& label,
                         const std::vector<double>& x,
                         const std::vector<gsws::Complex>& psi,
                         const gsws::PotentialParams& p) {
  Table t;
  t.command = label;
  t.params = echo_params(p);
  t.columns = {"x_fm", "re_psi", "im_psi"};
  for (std::size_t i = 0; i < x.size(); ++i)
    t.rows.push_back({x[i], psi[i].real(), psi[i].imag()});
  return t;
}

bool want_parity(const std::string& sel, gsws::Parity p) {
  if (sel == "both") return true;
  return (sel == "even") == (p == gsws::Parity::kEven);
}

}  // namespace

int cmd_potential(const CommonConfig& cfg, double x_min, double x_max,
                  int samples, std::optional<int> mws_p,
                  std::optional<int> mws_q) {
  if (!(x_max > x_min) || samples < 2)
    throw gsws::DomainError("potential: invalid sample range");
  const bool with_mws = mws_p.has_value() || mws_q.has_value();
  gsws::MwsParams mws;
  if (with_mws) {
    mws.v0 = cfg.params.v0;
    mws.a = cfg.params.a;
    mws.L = cfg.params.L;
    mws.p = mws_p.value_or(1);
    mws.q = mws_q.value_or(1);
    mws.validate();
  }
  gsws::PotentialParams plain = cfg.params;
  plain.w0 = 0.0;

  Table t;
  t.command = "potential";
  t.params = echo_params(cfg.params);
  t.columns = {"x_fm", "V_gsws_MeV", "V_ws_MeV"};
  if (with_mws) t.columns.push_back("V_mws_MeV");
  for (int i = 0; i < samples; ++i) {
    const double x = x_min + (x_max - x_min) * i / (samples - 1);
    std::vector<Cell> row{x, gsws::potential_gsws(cfg.params, x),
                          gsws::potential_gsws(plain, x)};
    if (with_mws) row.push_back(gsws::potential_mws(mws, x));
    t.rows.push_back(std::move(row));
  }
  emit(cfg, t);
  return 0;
}

int cmd_scatter(const CommonConfig& cfg, const std::string& axis, double lo,
                double hi, int steps, std::optional<double> energy) {
  gsws::SweepAxis ax;
  std::string axis_col;
  if (axis == "energy") {
    ax = gsws::SweepAxis::kEnergy;
    axis_col = "E_MeV";
  } else if (axis == "v0") {
    ax = gsws::SweepAxis::kV0;
    axis_col = "V0_MeV";
  } else if (axis == "w0") {
    ax = gsws::SweepAxis::kW0;
    axis_col = "W0_MeV";
  } else if (axis == "a") {
    ax = gsws::SweepAxis::kA;
    axis_col = "a_invfm";
  } else if (axis == "L") {
    ax = gsws::SweepAxis::kL;
    axis_col = "L_fm";
  } else {
    throw gsws::DomainError("scatter: unknown axis " + axis);
  }
  const bool with_hb =
      ax == gsws::SweepAxis::kV0 || ax == gsws::SweepAxis::kW0;

  const auto rows = gsws::sweep(cfg.params, ax, lo, hi, steps, energy);
  Table t;
  t.command = "scatter";
  t.params = echo_params(cfg.params);
  if (energy) t.params.emplace_back("energy", *energy);
  t.columns = {axis_col, "R", "T"};
  if (with_hb) t.columns.push_back("HB_MeV");
  t.columns.push_back("status");
  for (const auto& r : rows) {
    std::vector<Cell> row{r.axis_value, r.r, r.t};
    if (with_hb) row.push_back(r.hb_defined ? Cell(r.hb) : Cell(kNaN));
    row.push_back(std::string(r.ok ? "ok" : "error"));
    if (!r.ok)
      std::cerr << "scatter: point " << format_g17(r.axis_value)
                << " failed: " << r.error << "\n";
    t.rows.push_back(std::move(row));
  }
  emit(cfg, t);
  return 0;
}

int cmd_resonances(const CommonConfig& cfg, double lo, double hi) {
  const auto res = gsws::find_resonances(cfg.params, lo, hi);
  Table t;
  t.command = "resonances";
  t.params = echo_params(cfg.params);
  t.columns = {"E_MeV", "T"};
  for (double e : res)
    t.rows.push_back({e, gsws::reflection_transmission(cfg.params, e).t});
  emit(cfg, t);
  return 0;
}

int cmd_bound(const CommonConfig& cfg, const std::string& parity, bool dump,
              int x_samples, bool normalize) {
  gsws::BoundOptions opt;
  opt.x_samples = x_samples;
  const auto states = gsws::find_bound_states(cfg.params, opt);

  Table t;
  t.command = "bound";
  t.params = echo_params(cfg.params);
  t.columns = {"label", "parity", "E_MeV", "nodes"};
  std::vector<Table> wfs;
  for (const auto& s : states) {
    if (!want_parity(parity, s.parity)) continue;
    const bool even = s.parity == gsws::Parity::kEven;
    t.rows.push_back({static_cast<long long>(s.index),
                      std::string(even ? "even" : "odd"), s.energy,
                      static_cast<long long>(s.nodes)});
    if (dump) {
      std::vector<gsws::Complex> psi = s.psi;
      if (normalize) {  // trapezoidal L2 norm over the sample window
        double acc = 0.0;
        for (std::size_t i = 1; i < s.x.size(); ++i)
          acc += 0.5 * (std::norm(psi[i - 1]) + std::norm(psi[i])) *
                 (s.x[i] - s.x[i - 1]);
        const double scale = 1.0 / std::sqrt(acc);
        for (auto& v : psi) v *= scale;
      }
      wfs.push_back(wavefunction_table(label_of(s.parity, s.index), s.x, psi,
                                       cfg.params));
    }
  }
  emit(cfg, t, wfs);
  return 0;
}

int cmd_quasibound(const CommonConfig& cfg, const std::string& parity,
                   double lo, double hi, bool dump, int x_samples) {
  gsws::QuasiBoundOptions opt;
  opt.x_samples = x_samples;

  std::vector<gsws::QuasiBoundState> states;
  std::vector<gsws::Complex> failed;
  if (parity != "odd") {
    auto even = gsws::find_quasibound(cfg.params, gsws::Parity::kEven, lo, hi,
                                      opt, &failed);
    states.insert(states.end(), even.begin(), even.end());
  }
  if (parity != "even") {
    auto odd = gsws::find_quasibound(cfg.params, gsws::Parity::kOdd, lo, hi,
                                     opt, &failed);
    states.insert(states.end(), odd.begin(), odd.end());
  }
  for (const auto& s : failed)
    std::cerr << "quasibound: seed " << format_g17(s.real()) << ","
              << format_g17(s.imag()) << " did not converge\n";

  Table t;
  t.command = "quasibound";
  t.params = echo_params(cfg.params);
  t.columns = {"label",    "parity",
               "E_r_MeV",  "E_i_MeV",
               "linked_resonance_MeV", "over_barrier"};
  std::vector<Table> wfs;
  for (const auto& s : states) {
    const bool even = s.parity == gsws::Parity::kEven;
    t.rows.push_back({static_cast<long long>(s.index),
                      std::string(even ? "even" : "odd"), s.e_r, s.e_i,
                      s.linked_resonance ? Cell(*s.linked_resonance)
                                         : Cell(kNaN),
                      static_cast<long long>(s.over_barrier ? 1 : 0)});
    if (dump)
      wfs.push_back(wavefunction_table(label_of(s.parity, s.index), s.x,
                                       s.psi, cfg.params));
  }
  emit(cfg, t, wfs);
  return 0;
}

int cmd_verify(const CommonConfig& cfg, bool negative_control, bool quick) {
  gsws::VerifyOptions opt;
  opt.negative_control = negative_control;
  opt.quick = quick;
  const auto checks = gsws::run_verification(cfg.params, opt);

  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) throw std::runtime_error("cannot open " + cfg.out);
    os = &file;
  }
  *os << "verification report: v0=" << format_g17(cfg.params.v0)
      << " w0=" << format_g17(cfg.params.w0) << " a=" << format_g17(cfg.params.a)
      << " L=" << format_g17(cfg.params.L) << "\n";
  int ok = 0, gap = 0, bad = 0;
  for (const auto& c : checks) {
    const char* tag;
    if (c.passed == c.expected_pass) {
      tag = c.expected_pass ? "  OK " : "XFAIL";
      (c.expected_pass ? ok : gap)++;
    } else {
      tag = c.passed ? "XPASS" : " FAIL";
      ++bad;
    }
    char line[256];
    std::snprintf(line, sizeof line, "[%s] %-28s measured %.3e (tol %.1e) %s",
                  tag, c.id.c_str(), c.measured, c.threshold,
                  c.note.c_str());
    *os << line << "\n";
  }
  const bool passed = gsws::verification_passed(checks);
  *os << "overall: " << (passed ? "PASS" : "FAIL") << " (" << ok
      << " ok, " << gap << " known-gap, " << bad << " unexpected)\n";
  return passed ? 0 : 3;
}

}  // namespace gsws_cli
