#include "gsws/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace gsws {

namespace {

constexpr double kMinWavenumber = 1e-6;  // fm^-1; below this the plane-wave
                                         // decomposition is ill-conditioned

struct TailSolution {
  double value = 0.0;       // y at x = 0, normalized by the tail peak
  double derivative = 0.0;  // dy/dx at x = 0 (toward increasing x), same scale
  int nodes = 0;            // sign changes strictly inside the tail
};

// Numerov from one tail (side = -1: left, +1: right) to x = 0 with a
// decaying start. The edge derivative is a 5-point one-sided stencil,
// 4th order like the integrator itself.
TailSolution numerov_tail(const PotentialFn& potential, double two_m,
                          double energy, const IntegrationGrid& grid,
                          int side) {
  const double h = grid.step;
  const std::size_t n =
      static_cast<std::size_t>(std::llround(grid.x_max / h));
  const double decay = std::sqrt(std::max(two_m * -energy, 1e-12));

  auto x_at = [&](std::size_t i) {
    return side < 0 ? -grid.x_max + h * i : grid.x_max - h * i;
  };
  auto f_at = [&](std::size_t i) {
    const double g = two_m * (energy - potential(x_at(i)));
    return 1.0 + h * h / 12.0 * g;
  };

  double win[5] = {0.0, 0.0, 0.0, 1e-250, 1e-250 * std::exp(decay * h)};
  double f_p = f_at(0), f_c = f_at(1);
  double peak = std::abs(win[4]);
  TailSolution out;
  int sign_prev = win[4] > 0.0 ? 1 : -1;
  for (std::size_t i = 1; i < n; ++i) {
    const double f_n = f_at(i + 1);
    const double y_next =
        ((12.0 - 10.0 * f_c) * win[4] - f_p * win[3]) / f_n;
    for (int j = 0; j < 4; ++j) win[j] = win[j + 1];
    win[4] = y_next;
    f_p = f_c;
    f_c = f_n;
    peak = std::max(peak, std::abs(win[4]));
    if (peak > 1e200) {  // renormalize, the ODE is linear
      for (double& w : win) w /= peak;
      peak = std::abs(win[4]);
    }
    if (i + 1 < n && win[4] != 0.0) {  // nodes strictly inside the tail
      const int s = win[4] > 0.0 ? 1 : -1;
      if (s != sign_prev) ++out.nodes;
      sign_prev = s;
    }
  }
  peak = std::max({peak, std::abs(win[4])});
  out.value = win[4] / peak;
  const double d_onesided = (25.0 / 12.0 * win[4] - 4.0 * win[3] +
                             3.0 * win[2] - 4.0 / 3.0 * win[1] +
                             0.25 * win[0]) /
                            h;
  out.derivative = (side < 0 ? d_onesided : -d_onesided) / peak;
  return out;
}

// Wronskian-type mismatch at x = 0; zero at every bound level of either
// parity.
double match_wronskian(const TailSolution& left, const TailSolution& right,
                       double scale) {
  return (left.derivative * right.value - right.derivative * left.value) /
         scale;
}

}  // namespace

IntegrationGrid IntegrationGrid::recommended(const PotentialParams& p,
                                             double e_max) {
  p.validate();
  IntegrationGrid g;
  g.x_max = p.L + 20.0 / p.a;
  g.x_min = -g.x_max;
  const double k_max = std::sqrt(p.two_m_over_hbar2() * std::max(e_max, 1.0));
  const double target =
      std::min(0.01 / p.a, 2.0 * std::numbers::pi / k_max / 40.0);
  const std::size_t n = static_cast<std::size_t>(
      std::ceil((g.x_max - g.x_min) / target));
  g.step = (g.x_max - g.x_min) / static_cast<double>(n);
  g.samples = n + 1;
  return g;
}

IntegrationGrid IntegrationGrid::halved() const {
  IntegrationGrid g = *this;
  g.step = 0.5 * step;
  g.samples = 2 * (samples - 1) + 1;
  return g;
}

void IntegrationGrid::validate(const PotentialParams& p) const {
  if (x_max != -x_min || !(x_max >= p.L + 20.0 / p.a - 1e-9))
    throw DomainError("IntegrationGrid: domain must be symmetric, >= L+20/a");
  if (!(step > 0.0) || step > 0.01 / p.a * (1.0 + 1e-9))
    throw DomainError("IntegrationGrid: step too large");
}

ScatteringResult integrate_rt(const PotentialFn& potential, double two_m,
                              double energy, const IntegrationGrid& grid) {
  if (!(energy > 0.0)) throw DomainError("integrate_rt: requires E > 0");
  const double k = std::sqrt(two_m * energy);
  if (k < kMinWavenumber)
    throw DomainError("integrate_rt: k too small, decomposition singular");

  const double h = grid.step;
  const std::size_t n =
      static_cast<std::size_t>(std::llround((grid.x_max - grid.x_min) / h));

  // phi'' = -g(x) phi integrated backward from a pure transmitted wave
  auto rhs = [&](double x, Complex phi, Complex dphi, Complex& out_d,
                 Complex& out_dd) {
    out_d = dphi;
    out_dd = -two_m * (energy - potential(x)) * phi;
  };
  Complex phi = std::exp(Complex(0.0, k * grid.x_max));
  Complex dphi = Complex(0.0, k) * phi;
  double x = grid.x_max;
  for (std::size_t i = 0; i < n; ++i) {
    Complex k1v, k1d, k2v, k2d, k3v, k3d, k4v, k4d;
    rhs(x, phi, dphi, k1v, k1d);
    rhs(x - 0.5 * h, phi - 0.5 * h * k1v, dphi - 0.5 * h * k1d, k2v, k2d);
    rhs(x - 0.5 * h, phi - 0.5 * h * k2v, dphi - 0.5 * h * k2d, k3v, k3d);
    rhs(x - h, phi - h * k3v, dphi - h * k3d, k4v, k4d);
    phi -= h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    dphi -= h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
    x -= h;
  }

  // phi = A e^{ikx} + B e^{-ikx} at x_min
  const Complex ik(0.0, k);
  const Complex e_plus = std::exp(ik * x);
  const Complex a_inc = 0.5 * (phi + dphi / ik) / e_plus;
  const Complex b_ref = 0.5 * (phi - dphi / ik) * e_plus;

  ScatteringResult out;
  out.energy = energy;
  out.r = std::norm(b_ref) / std::norm(a_inc);
  out.t = 1.0 / std::norm(a_inc);
  out.unitarity_defect = std::abs(out.r + out.t - 1.0);
  return out;
}

ScatteringResult oracle_rt(const PotentialParams& p, double energy,
                           const IntegrationGrid& grid) {
  grid.validate(p);
  return integrate_rt([&p](double x) { return potential_gsws(p, x); },
                      p.two_m_over_hbar2(), energy, grid);
}

std::vector<OracleBoundState> integrate_bound(const PotentialFn& potential,
                                              double two_m, double v_floor,
                                              const IntegrationGrid& grid) {
  std::vector<OracleBoundState> out;
  if (!(v_floor < 0.0)) return out;

  auto mismatch = [&](double e) {
    const auto left = numerov_tail(potential, two_m, e, grid, -1);
    const auto right = numerov_tail(potential, two_m, e, grid, +1);
    const double scale = std::sqrt(two_m * (e - v_floor));
    return match_wronskian(left, right, scale);
  };

  // base scan plus 10x density over the top 1% of the well
  std::vector<double> es;
  const double e_lo = v_floor * (1.0 - 1e-6);
  const double e_split = 0.01 * v_floor;
  const double e_hi = 1e-6 * v_floor;
  const int n_base = 1800, n_top = 2000;
  for (int i = 0; i <= n_base; ++i)
    es.push_back(e_lo + (e_split - e_lo) * i / n_base);
  for (int i = 1; i <= n_top; ++i)
    es.push_back(e_split + (e_hi - e_split) * i / n_top);

  double f_prev = mismatch(es[0]);
  for (std::size_t i = 1; i < es.size(); ++i) {
    const double f = mismatch(es[i]);
    if ((f_prev < 0.0) != (f < 0.0)) {
      double a = es[i - 1], b = es[i], fa = f_prev;
      while (b - a > 1e-10 * std::max(1.0, std::abs(a))) {
        const double m = 0.5 * (a + b);
        const double fm = mismatch(m);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      const double e = 0.5 * (a + b);
      const auto left = numerov_tail(potential, two_m, e, grid, -1);
      // parity from the converged half-solution: even levels have a flat
      // center, odd levels a zero
      const double k_in = std::sqrt(two_m * (e - v_floor));
      const bool even = std::abs(left.derivative) <
                        k_in * std::abs(left.value);
      OracleBoundState st;
      st.energy = e;
      st.parity = even ? Parity::kEven : Parity::kOdd;
      st.nodes = 2 * left.nodes + (even ? 0 : 1);
      out.push_back(st);
    }
    f_prev = f;
  }
  return out;
}

std::vector<OracleBoundState> oracle_bound(const PotentialParams& p,
                                           const IntegrationGrid& grid) {
  grid.validate(p);
  if (!(p.v0 > 0.0)) return {};
  return integrate_bound([&p](double x) { return potential_gsws(p, x); },
                         p.two_m_over_hbar2(), -p.v0, grid);
}

double probability_current(const PotentialParams& p, Complex phi,
                           Complex dphi) {
  return p.hbarc / p.mc2 * (std::conj(phi) * dphi).imag();
}

}  // namespace gsws
