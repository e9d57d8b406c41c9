#include "gsws/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gsws/oracle.hpp"
#include "gsws/resonance.hpp"
#include "gsws/scattering.hpp"
#include "gsws/spectrum.hpp"
#include "gsws/specfun.hpp"
#include "gsws/wavefunction.hpp"

namespace gsws {

namespace {

constexpr double kReferenceResonances[] = {15.4913, 30.6153, 50.37};
constexpr double kReferenceEven[] = {-93.138, -67.307, -34.725, -0.125};
constexpr double kReferenceOdd[] = {-81.403, -51.567, -17.330};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

bool matches_reference_set(const PotentialParams& p) {
  auto close = [](double a, double b) { return std::abs(a - b) < 1e-9; };
  return close(p.v0, 100.0) && close(p.w0, 250.0) && close(p.a, 1.0) &&
         close(p.L, 6.0) && close(p.mc2, 940.0) && close(p.hbarc, 197.329);
}

CheckResult make(const std::string& id, const std::string& name,
                 double measured, double threshold, bool expected_pass = true,
                 const std::string& note = "") {
  CheckResult c;
  c.id = id;
  c.name = name;
  c.measured = measured;
  c.threshold = threshold;
  c.passed = measured <= threshold;
  c.expected_pass = expected_pass;
  c.note = note;
  return c;
}

// T with a deliberately inconsistent theta (theta(1-theta) != gamma2);
// the branch-invariance negative control.
double transmission_with_corrupt_theta(const PotentialParams& p, double e) {
  DerivedParams dp = derive(p, Complex(e, 0.0), Regime::kScattering);
  dp.theta += 0.05;
  dp.a1 = dp.mu + dp.theta + dp.nu;
  dp.b1 = 1.0 + dp.mu - dp.theta + dp.nu;
  const auto cc = connection_coefficients(dp);
  const double kL = dp.kappa.real() * p.L;
  const Complex ph(0.0, 2.0 * kL);
  const Complex den = std::exp(cc.log_n4 - cc.log_n3 + ph) -
                      std::exp(cc.log_n3 - cc.log_n4 - ph);
  const Complex d4 =
      (std::exp(cc.log_n1 - cc.log_n3) - std::exp(cc.log_n2 - cc.log_n4)) /
      den;
  return std::norm(d4);
}

double max_abs_diff_sorted(const std::vector<double>& a,
                           const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

ContinuityDefect matching_continuity(const PotentialParams& p, Complex energy,
                                     Regime regime, Parity parity,
                                     bool second_solution,
                                     ThetaBranch branch) {
  const DerivedParams dp = derive(p, energy, regime, branch);
  const double h = 2e-4 / p.a;
  // cubic extrapolation/differentiation through x = -4h..-h and h..4h,
  // never through x = 0 where the odd assembly is defined as 0
  static constexpr double kVal[] = {4.0, -6.0, 4.0, -1.0};
  static constexpr double kDer[] = {-13.0 / 3, 19.0 / 2, -7.0, 11.0 / 6};
  Complex fl[4], fr[4];
  for (int j = 0; j < 4; ++j) {
    fl[j] = wavefunction_raw(p, dp, parity, second_solution, -(j + 1) * h);
    fr[j] = wavefunction_raw(p, dp, parity, second_solution, (j + 1) * h);
  }
  Complex value_l = 0.0, value_r = 0.0, der_l = 0.0, der_r = 0.0;
  for (int j = 0; j < 4; ++j) {
    value_l += kVal[j] * fl[j];
    value_r += kVal[j] * fr[j];
    der_l += -kDer[j] * fl[j] / h;
    der_r += kDer[j] * fr[j] / h;
  }
  // interior scale: |psi| ~ peak near the matching point, gradient ~ kappa
  double peak = 0.0;
  for (int j = 0; j < 4; ++j)
    peak = std::max({peak, std::abs(fl[j]), std::abs(fr[j])});
  peak = std::max(peak, std::max(std::abs(value_l), std::abs(value_r)));
  const double kbar = std::abs(dp.kappa);
  ContinuityDefect d;
  d.value_jump = std::abs(value_l - value_r) / peak;
  d.derivative_jump = std::abs(der_l - der_r) / (kbar * peak);
  return d;
}

std::vector<CheckResult> run_verification(const PotentialParams& p,
                                          const VerifyOptions& opt) {
  p.validate();
  std::vector<CheckResult> out;
  const bool reference = matches_reference_set(p);
  const int grid_n = opt.quick ? 100 : 500;

  // -- unitarity over the energy grid -------------------------------------
  {
    double worst = 0.0;
    for (int i = 0; i < grid_n; ++i) {
      const double e = 0.1 + (80.0 - 0.1) * i / (grid_n - 1);
      worst = std::max(worst, reflection_transmission(p, e).unitarity_defect);
    }
    out.push_back(make("unitarity", "max |R+T-1| over energy grid", worst,
                       1e-10));
  }

  // -- reference resonance energies ----------------------------------------
  std::vector<double> resonances;
  if (reference) {
    resonances = find_resonances(p, 1e-3, 60.0);
    double worst = std::numeric_limits<double>::infinity();
    if (resonances.size() == 3) {
      worst = 0.0;
      const double tol[] = {0.01, 0.01, 0.05};
      for (int i = 0; i < 3; ++i)
        worst = std::max(worst,
                         std::abs(resonances[i] - kReferenceResonances[i]) /
                             tol[i]);
      for (double e : resonances)
        if (reflection_transmission(p, e).t < 1.0 - 1e-6)
          worst = std::numeric_limits<double>::infinity();
    }
    out.push_back(make("resonances", "transmission resonances vs reference",
                       worst, 1.0, true,
                       "tolerances 0.01/0.01/0.05 MeV, T >= 1-1e-6"));
  }

  // -- reference bound spectrum --------------------------------------------
  std::vector<BoundState> bound;
  if (reference) {
    bound = find_bound_states(p);
    double worst = std::numeric_limits<double>::infinity();
    if (bound.size() == 7) {
      worst = 0.0;
      std::vector<double> even, odd;
      for (const auto& s : bound)
        (s.parity == Parity::kEven ? even : odd).push_back(s.energy);
      if (even.size() == 4 && odd.size() == 3) {
        for (int i = 0; i < 4; ++i)
          worst = std::max(worst, std::abs(even[i] - kReferenceEven[i]));
        for (int i = 0; i < 3; ++i)
          worst = std::max(worst, std::abs(odd[i] - kReferenceOdd[i]));
      } else {
        worst = std::numeric_limits<double>::infinity();
      }
    }
    out.push_back(make("bound-spectrum", "bound spectrum vs reference (MeV)",
                       worst, 0.01, true, "7 states, 4 even + 3 odd"));
  }

  // -- oracle agreement, closed-form and exact-matching --------------------
  // The closed-form-vs-oracle comparisons carry the O(e^{-aL}) matching
  // gap; their expected-fail status is characterized at the reference
  // geometry (aL = 6), so they are reported only there. The exact-matching
  // comparisons hold uniformly in aL and always run.
  {
    const auto grid = IntegrationGrid::recommended(p, 80.0);
    const int n = opt.quick ? 10 : 50;
    double worst_closed = 0.0, worst_exact = 0.0;
    for (int i = 0; i < n; ++i) {
      const double e = 1.0 + (80.0 - 1.0) * i / (n - 1);
      const auto numeric = oracle_rt(p, e, grid);
      const auto closed = reflection_transmission(p, e);
      const auto exact = reflection_transmission_exact(p, e);
      worst_closed = std::max({worst_closed, std::abs(closed.r - numeric.r),
                               std::abs(closed.t - numeric.t)});
      worst_exact = std::max({worst_exact, std::abs(exact.r - numeric.r),
                              std::abs(exact.t - numeric.t)});
    }
    if (reference)
      out.push_back(make(
          "rt-closed-vs-oracle", "closed-form R,T vs integration oracle",
          worst_closed, 1e-6, false,
          "known gap: the closed-form matching drops O(e^{-aL}) terms"));
    out.push_back(make("rt-exact-vs-oracle",
                       "exact-matching R,T vs integration oracle",
                       worst_exact, 1e-6));
  }

  std::vector<OracleBoundState> numerov;
  if (p.v0 > 0.0) {
    const auto grid = IntegrationGrid::recommended(p, p.v0);
    numerov = oracle_bound(p, grid);
    const auto closed = reference ? bound : find_bound_states(p);
    const auto exact = find_bound_states_exact(p);
    auto rel_gap = [&](const std::vector<BoundState>& st) {
      if (st.size() != numerov.size())
        return std::numeric_limits<double>::infinity();
      double m = 0.0;
      for (std::size_t i = 0; i < st.size(); ++i)
        m = std::max(m, std::abs(st[i].energy - numerov[i].energy) /
                            std::abs(numerov[i].energy));
      return m;
    };
    if (reference)
      out.push_back(make(
          "bound-closed-vs-oracle",
          "closed-form spectrum vs Numerov oracle (relative)",
          rel_gap(closed), 1e-4, false,
          "known gap: the closed-form matching drops O(e^{-aL}) terms"));
    out.push_back(make("bound-exact-vs-oracle",
                       "exact-matching spectrum vs Numerov oracle (relative)",
                       rel_gap(exact), 1e-4));

    // grid halving
    if (!opt.quick) {
      const auto fine = oracle_bound(p, grid.halved());
      double shift = max_abs_diff_sorted(
          [&] {
            std::vector<double> v;
            for (const auto& s : numerov) v.push_back(s.energy);
            return v;
          }(),
          [&] {
            std::vector<double> v;
            for (const auto& s : fine) v.push_back(s.energy);
            return v;
          }());
      out.push_back(make("oracle-bound-grid",
                         "Numerov eigenvalue shift under step halving (MeV)",
                         shift, 1e-6));
    }
  }

  if (!opt.quick) {
    const auto grid = IntegrationGrid::recommended(p, 80.0);
    const auto fine = grid.halved();
    double worst = 0.0;
    for (double e : {5.0, 20.0, 40.0, 75.0}) {
      const auto c = oracle_rt(p, e, grid);
      const auto f = oracle_rt(p, e, fine);
      worst = std::max({worst, std::abs(c.r - f.r), std::abs(c.t - f.t)});
    }
    out.push_back(make("oracle-rt-grid",
                       "oracle R,T change under step halving", worst, 1e-8));
  }

  // -- quasi-bound reference values and linkage ----------------------------
  if (reference) {
    const auto odd250 = find_quasibound(p, Parity::kOdd, 1.0, 60.0);
    const auto even250 = find_quasibound(p, Parity::kEven, 1.0, 60.0);
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& s : odd250)
      if (std::abs(s.e_r - 15.431) < 0.5)
        worst = std::max(std::abs(s.e_r - 15.431),
                         std::abs(s.e_i - 0.532349));
    out.push_back(make("quasibound-reference",
                       "odd quasi-bound state vs reference (MeV)", worst,
                       0.01));

    PotentialParams p450 = p;
    p450.w0 = 450.0;
    const auto even450 = find_quasibound(p450, Parity::kEven, 1.0, 60.0);
    const auto odd450 = find_quasibound(p450, Parity::kOdd, 1.0, 60.0);
    double w_even = std::numeric_limits<double>::infinity();
    for (const auto& s : even450)
      if (std::abs(s.e_r - 20.0801) < 0.5)
        w_even = std::max(std::abs(s.e_r - 20.0801) / 0.01,
                          std::abs(s.e_i - 0.00137933) / 1e-4);
    double w_odd = std::numeric_limits<double>::infinity();
    for (const auto& s : odd450)
      if (std::abs(s.e_r - 40.9262) < 0.5)
        w_odd = std::max(std::abs(s.e_r - 40.9262) / 0.01,
                         std::abs(s.e_i - 0.0648113) / 1e-3);
    out.push_back(make("quasibound-reference-450",
                       "deep-barrier quasi-bound pair vs reference",
                       std::max(w_even, w_odd), 1.0));

    // every genuine quasi-bound state sits at a transmission resonance;
    // the even over-barrier root is reported flagged, not dropped
    double link = 0.0;
    bool flagged = false;
    auto check_link = [&](const std::vector<QuasiBoundState>& states) {
      for (const auto& s : states) {
        if (s.over_barrier) continue;
        link = std::max(link, s.linked_resonance
                                  ? std::abs(*s.linked_resonance - s.e_r)
                                  : std::numeric_limits<double>::infinity());
      }
    };
    check_link(odd250);
    check_link(even250);
    check_link(even450);
    check_link(odd450);
    for (const auto& s : even250)
      if (std::abs(s.e_r - 28.6791) < 0.05 && std::abs(s.e_i - 4.24688) < 0.01)
        flagged = s.over_barrier;
    out.push_back(make("resonance-linkage",
                       "quasi-bound <-> resonance linkage (MeV)", link, 0.5));
    out.push_back(make("over-barrier-flag",
                       "even root above the barrier is reported flagged",
                       flagged ? 0.0 : 1.0, 0.5));
  }

  // -- theta branch invariance (or the negative control) -------------------
  {
    double worst = 0.0;
    const int n = opt.quick ? 8 : 25;
    for (int i = 0; i < n; ++i) {
      const double e = 2.0 + (78.0 - 2.0) * i / (n - 1);
      const auto plus = reflection_transmission(p, e, ThetaBranch::kPlus);
      const double t_other =
          opt.negative_control
              ? transmission_with_corrupt_theta(p, e)
              : reflection_transmission(p, e, ThetaBranch::kMinus).t;
      worst = std::max(worst, std::abs(plus.t - t_other));
    }
    if (p.v0 > 0.0 && !opt.negative_control) {
      const auto plus = find_bound_states(p);
      const auto minus = find_bound_states(p, {}, ThetaBranch::kMinus);
      std::vector<double> ep, em;
      for (const auto& s : plus) ep.push_back(s.energy);
      for (const auto& s : minus) em.push_back(s.energy);
      worst = std::max(worst, max_abs_diff_sorted(ep, em));
    }
    out.push_back(make("theta-branch",
                       opt.negative_control
                           ? "theta branch invariance (negative control)"
                           : "theta branch swap leaves R, T, spectrum",
                       worst, 1e-10, true,
                       opt.negative_control
                           ? "corrupted theta must break this check"
                           : ""));
  }

  // -- wavefunction continuity at the matching point ------------------------
  if (p.v0 > 0.0) {
    const auto closed = reference ? bound : find_bound_states(p);
    double worst_closed = 0.0, odd_origin = 0.0;
    for (const auto& s : closed) {
      const auto d = matching_continuity(p, Complex(s.energy, 0.0),
                                         Regime::kBound, s.parity, false);
      worst_closed = std::max({worst_closed, d.value_jump, d.derivative_jump});
      if (s.parity == Parity::kOdd)
        odd_origin = std::max(odd_origin,
                              std::abs(bound_wavefunction(p, s, 0.0)));
    }
    if (reference) {
      for (const auto& s : find_quasibound(p, Parity::kOdd, 1.0, 60.0)) {
        const auto d =
            matching_continuity(p, Complex(s.e_r, -s.e_i),
                                Regime::kQuasiBound, s.parity, true);
        worst_closed =
            std::max({worst_closed, d.value_jump, d.derivative_jump});
      }
    }
    if (reference)
      out.push_back(make(
          "continuity-closed",
          "psi, psi' continuity at x=0, closed-form levels", worst_closed,
          1e-6, false,
          "known gap: levels carry the O(e^{-aL}) matching shift"));

    const auto exact = find_bound_states_exact(p);
    double worst_exact = 0.0;
    for (const auto& s : exact) {
      const auto d = matching_continuity(p, Complex(s.energy, 0.0),
                                         Regime::kBound, s.parity, false);
      worst_exact = std::max({worst_exact, d.value_jump, d.derivative_jump});
    }
    out.push_back(make("continuity-exact",
                       "psi, psi' continuity at x=0, exact-matched levels",
                       worst_exact, 1e-6));
    out.push_back(make("odd-origin", "odd wavefunctions vanish at x=0",
                       odd_origin, 1e-14));
  }

  // -- limiting behavior ----------------------------------------------------
  {
    const double r0 = reflection_transmission(p, 1e-3).r;
    out.push_back(make("low-energy-limit", "R -> 1 as E -> 0+", 1.0 - r0,
                       1e-4));
  }
  try {
    const double hb = barrier_height(p);
    const int n = opt.quick ? 20 : 60;
    double t_prev = reflection_transmission(p, 5.0 * hb).t;
    double worst_drop = 0.0;
    for (int i = 1; i < n; ++i) {
      const double e = 5.0 * hb + (10.0 * hb - 5.0 * hb) * i / (n - 1);
      const double t = reflection_transmission(p, e).t;
      worst_drop = std::max(worst_drop, t_prev - t);
      t_prev = t;
    }
    out.push_back(make(
        "high-energy-monotone", "T monotone non-decreasing beyond 5 HB",
        worst_drop, 1e-12, false,
        "physically false: above-barrier resonance oscillation persists"));
    const double t_top = reflection_transmission(p, 10.0 * hb).t;
    out.push_back(make("high-energy-limit", "T -> 1 well above the barrier",
                       1.0 - t_top, 1e-4));
  } catch (const DomainError&) {
    // no barrier for these parameters; the high-energy checks do not apply
  }

  // note the worst unitarity defect in the report header line
  if (!out.empty() && out.front().id == "unitarity")
    out.front().note = "worst defect " + fmt(out.front().measured);
  return out;
}

bool verification_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.passed == c.expected_pass;
  });
}

}  // namespace gsws
