#include "gsws/wavefunction.hpp"

#include <cmath>
#include <numbers>

namespace gsws {

namespace {

constexpr Complex kIPi(0.0, std::numbers::pi);

// log of 1/(1+e^{-t}), stable for any t
double log_logistic(double t) {
  return t >= 0.0 ? -std::log1p(std::exp(-t)) : t - std::log1p(std::exp(t));
}

}  // namespace

BoundaryValues boundary_values(const PotentialParams& p,
                               const DerivedParams& dp) {
  const double aL = p.a * p.L;
  const double w = 1.0 / (1.0 + std::exp(aL));  // 1 - z(0), no cancellation
  const double z = 1.0 - w;
  const double log_w = -std::log1p(std::exp(aL));
  const double log_z = std::log1p(-w);

  const Complex a1 = dp.a1, b1 = dp.b1, c1 = dp.c1;
  const Complex a2 = 1.0 + a1 - c1, b2 = 1.0 + b1 - c1, c2 = 2.0 - c1;

  const Complex f1 = hyp2f1_near_unit(a1, b1, c1, w);
  const Complex df1 =
      a1 * b1 / c1 * hyp2f1_near_unit(a1 + 1.0, b1 + 1.0, c1 + 1.0, w);
  const Complex f2 = hyp2f1_near_unit(a2, b2, c2, w);
  const Complex df2 =
      a2 * b2 / c2 * hyp2f1_near_unit(a2 + 1.0, b2 + 1.0, c2 + 1.0, w);

  const Complex base = std::exp(dp.nu * (kIPi + log_w));
  const Complex pref_u = std::exp(dp.mu * log_z) * base;
  const Complex pref_v = std::exp(-dp.mu * log_z) * base;
  const double dz_dx = p.a * z * w;  // dz/dx = a z (1-z)

  BoundaryValues bv;
  bv.u = pref_u * f1;
  bv.du = dz_dx * pref_u * ((dp.mu / z - dp.nu / w) * f1 + df1);
  bv.v = pref_v * f2;
  bv.dv = dz_dx * pref_v * ((-dp.mu / z - dp.nu / w) * f2 + df2);
  return bv;
}

Complex wavefunction_raw(const PotentialParams& p, const DerivedParams& dp,
                         Parity parity, bool second_solution, double x) {
  if (x == 0.0 && parity == Parity::kOdd) return Complex(0.0, 0.0);
  const double sign = (x > 0.0 && parity == Parity::kOdd) ? -1.0 : 1.0;

  const double t = p.a * (p.L - std::abs(x));
  const double log_z = log_logistic(t);
  const double log_w = log_logistic(-t);
  const double z = std::exp(log_z);
  const double w = std::exp(log_w);

  Complex pa = dp.a1, pb = dp.b1, pc = dp.c1, zpow = dp.mu;
  if (second_solution) {
    pa = 1.0 + dp.a1 - dp.c1;
    pb = 1.0 + dp.b1 - dp.c1;
    pc = 2.0 - dp.c1;
    zpow = -dp.mu;
  }
  const Complex f =
      z <= 0.5 ? hyp2f1(pa, pb, pc, z) : hyp2f1_near_unit(pa, pb, pc, w);
  return sign * std::exp(zpow * log_z + dp.nu * (kIPi + log_w)) * f;
}

}  // namespace gsws
