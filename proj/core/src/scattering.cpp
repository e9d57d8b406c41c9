#include "gsws/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gsws/wavefunction.hpp"

namespace gsws {

namespace {

constexpr double kResonanceTGate = 1e-4;   // accept roots with T >= 1 - gate
constexpr double kRealnessTol = 1e-10;
constexpr double kCrossCheckTol = 1e-10;
constexpr int kScanIntervals = 2000;

struct PhasedCoefficients {
  ConnectionCoefficients cc;
  double kappa_L;
};

PhasedCoefficients coefficients_at(const PotentialParams& p, double energy,
                                   ThetaBranch branch) {
  const DerivedParams dp = derive(p, Complex(energy, 0.0),
                                  Regime::kScattering, branch);
  return {connection_coefficients(dp), dp.kappa.real() * p.L};
}

ScatteringResult from_ratios(double energy, const AmplitudeRatios& ar) {
  ScatteringResult out;
  out.energy = energy;
  out.r = std::norm(ar.d2_over_d1);
  out.t = std::norm(ar.d4_over_d1);
  out.unitarity_defect = std::abs(out.r + out.t - 1.0);
  return out;
}

}  // namespace

AmplitudeRatios amplitude_ratios(const PotentialParams& p, double energy,
                                 ThetaBranch branch) {
  const auto [cc, kL] = coefficients_at(p, energy, branch);
  const Complex ph(0.0, 2.0 * kL);  // log of e^{2 i kappa L}
  const Complex den = std::exp(cc.log_n4 - cc.log_n3 + ph) -
                      std::exp(cc.log_n3 - cc.log_n4 - ph);
  AmplitudeRatios ar;
  ar.d2_over_d1 = (std::exp(cc.log_n1 - cc.log_n4 - ph) -
                   std::exp(cc.log_n2 - cc.log_n3 + ph)) /
                  den;
  ar.d4_over_d1 = (std::exp(cc.log_n1 - cc.log_n3) -
                   std::exp(cc.log_n2 - cc.log_n4)) /
                  den;
  return ar;
}

ScatteringResult reflection_transmission(const PotentialParams& p,
                                         double energy, ThetaBranch branch) {
  const auto out = from_ratios(energy, amplitude_ratios(p, energy, branch));

  // cross-check against the N-ratio closed forms
  const auto [cc, kL] = coefficients_at(p, energy, branch);
  const Complex x =
      std::exp(cc.log_n1 + cc.log_n4 - cc.log_n2 - cc.log_n3);
  const Complex y = std::exp(cc.log_n2 + cc.log_n4 - cc.log_n1 - cc.log_n3 +
                             Complex(0.0, 4.0 * kL));
  const Complex den = x + 1.0 / x - (y + 1.0 / y);
  const double r_closed = ((2.0 - (y + 1.0 / y)) / den).real();
  const double t_closed = ((x + 1.0 / x - 2.0) / den).real();
  if (std::abs(r_closed - out.r) > kCrossCheckTol ||
      std::abs(t_closed - out.t) > kCrossCheckTol)
    throw ConsistencyError(
        "reflection_transmission: ratio and closed forms disagree");
  return out;
}

ScatteringResult reflection_transmission_mirrored(const PotentialParams& p,
                                                  double energy,
                                                  ThetaBranch branch) {
  // Incident from +infinity: D1 = 0, D3 = 1; solve the continuity system
  // for the reflected (D4) and transmitted (D2) amplitudes.
  const auto [cc, kL] = coefficients_at(p, energy, branch);
  const Complex pp = std::exp(Complex(0.0, -kL));  // e^{-i kappa L}
  const Complex qq = std::exp(Complex(0.0, kL));
  const Complex sum = cc.n3 * pp + cc.n4 * qq;
  const Complex dif = cc.n3 * pp - cc.n4 * qq;
  const Complex rhs_v = (cc.n1 * pp + cc.n2 * qq) / sum;
  const Complex rhs_d = -(cc.n1 * pp - cc.n2 * qq) / dif;
  const Complex d2 = 0.5 * (rhs_v + rhs_d);   // transmitted to -infinity
  const Complex d4 = 0.5 * (rhs_d - rhs_v);   // reflected to +infinity
  ScatteringResult out;
  out.energy = energy;
  out.r = std::norm(d4);
  out.t = std::norm(d2);
  out.unitarity_defect = std::abs(out.r + out.t - 1.0);
  return out;
}

ScatteringResult reflection_transmission_exact(const PotentialParams& p,
                                               double energy,
                                               ThetaBranch branch) {
  const DerivedParams dp =
      derive(p, Complex(energy, 0.0), Regime::kScattering, branch);
  const BoundaryValues bv = boundary_values(p, dp);
  const Complex two_v_dv = 2.0 * bv.v * bv.dv;
  AmplitudeRatios ar;
  ar.d2_over_d1 = -(bv.du * bv.v + bv.u * bv.dv) / two_v_dv;
  ar.d4_over_d1 = (bv.u * bv.dv - bv.du * bv.v) / two_v_dv;
  return from_ratios(energy, ar);
}

double resonance_residual(const PotentialParams& p, double energy,
                          ThetaBranch branch) {
  const auto [cc, kL] = coefficients_at(p, energy, branch);
  // (N1 N3)^2 - (N2 N4)^2 over N1 N2 N3 N4 = g - 1/g with
  // g = N1 N3 / (N2 N4), |g| = 1 for real E.
  const Complex g =
      std::exp(cc.log_n1 + cc.log_n3 - cc.log_n2 - cc.log_n4);
  const Complex val =
      std::sin(Complex(4.0 * kL, 0.0)) + Complex(0.0, 0.5) * (g - 1.0 / g);
  if (std::abs(val.imag()) > kRealnessTol)
    throw ConsistencyError(
        "resonance_residual: non-real residual, branch error upstream");
  return val.real();
}

std::vector<double> find_resonances(const PotentialParams& p, double e_min,
                                    double e_max, ThetaBranch branch) {
  if (!(e_min > 0.0) || !(e_max > e_min))
    throw DomainError("find_resonances: requires 0 < e_min < e_max");
  const double lo = std::max(e_min, 1e-3);  // E = 0 is degenerate (c1 = 1)
  std::vector<double> out;
  if (lo >= e_max) return out;

  const double step = (e_max - lo) / kScanIntervals;
  double e_prev = lo;
  double f_prev = resonance_residual(p, e_prev, branch);
  for (int i = 1; i <= kScanIntervals; ++i) {
    const double e = lo + i * step;
    const double f = resonance_residual(p, e, branch);
    if ((f_prev < 0.0) != (f < 0.0) || f_prev == 0.0) {
      double a = e_prev, b = e, fa = f_prev;
      while (b - a > 1e-9) {
        const double m = 0.5 * (a + b);
        const double fm = resonance_residual(p, m, branch);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      const double root = 0.5 * (a + b);
      if (reflection_transmission(p, root, branch).t >= 1.0 - kResonanceTGate)
        out.push_back(root);
    }
    e_prev = e;
    f_prev = f;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SweepRow> sweep(const PotentialParams& p, SweepAxis axis,
                            double lo, double hi, int steps,
                            std::optional<double> fixed_energy) {
  if (steps < 2) throw DomainError("sweep: steps must be >= 2");
  if (axis != SweepAxis::kEnergy && !fixed_energy)
    throw DomainError("sweep: fixed_energy required for non-energy axes");
  if (axis == SweepAxis::kEnergy) lo = std::max(lo, 1e-3);

  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    SweepRow row;
    row.axis_value = lo + (hi - lo) * i / (steps - 1);
    PotentialParams q = p;
    double energy = fixed_energy.value_or(0.0);
    switch (axis) {
      case SweepAxis::kEnergy: energy = row.axis_value; break;
      case SweepAxis::kV0: q.v0 = row.axis_value; break;
      case SweepAxis::kW0: q.w0 = row.axis_value; break;
      case SweepAxis::kA: q.a = row.axis_value; break;
      case SweepAxis::kL: q.L = row.axis_value; break;
    }
    try {
      const auto rt = reflection_transmission(q, energy);
      row.r = rt.r;
      row.t = rt.t;
      try {
        row.hb = barrier_height(q);
        row.hb_defined = true;
      } catch (const DomainError&) {
        row.hb = nan;
        row.hb_defined = false;
      }
    } catch (const std::exception& e) {
      row.ok = false;
      row.error = e.what();
      row.r = row.t = row.hb = nan;
      row.hb_defined = false;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gsws
