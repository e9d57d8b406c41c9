#include "gsws/model.hpp"

#include <cmath>

namespace gsws {

void PotentialParams::validate() const {
  if (!(a > 0.0)) throw DomainError("PotentialParams: a must be > 0");
  if (!(L > 0.0)) throw DomainError("PotentialParams: L must be > 0");
  if (!(mc2 > 0.0)) throw DomainError("PotentialParams: mc2 must be > 0");
  if (!(hbarc > 0.0)) throw DomainError("PotentialParams: hbarc must be > 0");
}

void MwsParams::validate() const {
  if (p < 1) throw DomainError("MwsParams: p must be >= 1");
  if (q < 1) throw DomainError("MwsParams: q must be >= 1");
  if (!(a > 0.0)) throw DomainError("MwsParams: a must be > 0");
  if (!(L > 0.0)) throw DomainError("MwsParams: L must be > 0");
}

double potential_gsws(const PotentialParams& p, double x) {
  // 1/(1+e^t) = (1-tanh(t/2))/2 and e^t/(1+e^t)^2 = 1/(4 cosh^2(t/2))
  // stay finite for any t, unlike the raw exponentials.
  const double t = p.a * (std::abs(x) - p.L);
  const double sech = 1.0 / std::cosh(0.5 * t);
  return -0.5 * p.v0 * (1.0 - std::tanh(0.5 * t)) +
         0.25 * p.w0 * sech * sech;
}

double potential_mws(const MwsParams& p, double x) {
  const double e = std::exp(p.a * (std::abs(x) - p.L));
  return -p.v0 / (static_cast<double>(p.p) + static_cast<double>(p.q) * e);
}

double barrier_height(const PotentialParams& p) {
  if (!(p.v0 > 0.0) || !(p.w0 > 0.0) || p.w0 < p.v0)
    throw DomainError("barrier_height: no barrier (requires W0 >= V0 > 0)");
  const double d = p.v0 - p.w0;
  return d * d / (4.0 * p.w0);
}

DerivedParams derive(const PotentialParams& p, Complex energy, Regime regime,
                     ThetaBranch branch) {
  p.validate();
  const double c = p.two_m_over_hbar2();
  const double a2 = p.a * p.a;

  DerivedParams dp;
  dp.energy = energy;
  dp.eps2 = -c * energy / a2;
  dp.beta2 = c * (p.v0 - p.w0) / a2;
  dp.gamma2 = c * p.w0 / a2;

  switch (regime) {
    case Regime::kScattering: {
      if (energy.imag() != 0.0 || !(energy.real() > 0.0))
        throw DomainError("derive: scattering requires real E > 0");
      const double k = std::sqrt(c * energy.real());
      const double kap = std::sqrt(c * (energy.real() + p.v0));
      dp.k = Complex(k, 0.0);
      dp.kappa = Complex(kap, 0.0);
      dp.mu = Complex(0.0, k / p.a);
      dp.nu = Complex(0.0, kap / p.a);
      break;
    }
    case Regime::kBound: {
      const double e = energy.real();
      if (energy.imag() != 0.0 || !(e >= -p.v0) || !(e < 0.0))
        throw DomainError("derive: bound requires real E in [-V0, 0)");
      const double kn = std::sqrt(-c * e);
      const double kap = std::sqrt(c * (e + p.v0));
      dp.k = Complex(0.0, kn);  // principal sqrt(2mE)/hbar for E < 0
      dp.kappa = Complex(kap, 0.0);
      dp.mu = Complex(kn / p.a, 0.0);
      dp.nu = Complex(0.0, kap / p.a);
      break;
    }
    case Regime::kQuasiBound: {
      if (!(energy.real() > 0.0) || energy.imag() > 0.0)
        throw DomainError(
            "derive: quasi-bound requires Re E > 0 and Im E <= 0");
      Complex k = std::sqrt(c * energy);
      if (k.real() < 0.0) k = -k;  // outgoing wave branch
      Complex kap = std::sqrt(c * (energy + p.v0));
      if (kap.real() < 0.0) kap = -kap;
      dp.k = k;
      dp.kappa = kap;
      dp.mu = Complex(0.0, 1.0) * k / p.a;
      dp.nu = Complex(0.0, 1.0) * kap / p.a;
      break;
    }
  }

  const double g = 0.25 - dp.gamma2;
  const Complex root =
      g >= 0.0 ? Complex(std::sqrt(g), 0.0) : Complex(0.0, std::sqrt(-g));
  dp.theta = 0.5 + (branch == ThetaBranch::kPlus ? root : -root);

  dp.a1 = dp.mu + dp.theta + dp.nu;
  dp.b1 = 1.0 + dp.mu - dp.theta + dp.nu;
  dp.c1 = 1.0 + 2.0 * dp.mu;
  return dp;
}

}  // namespace gsws
