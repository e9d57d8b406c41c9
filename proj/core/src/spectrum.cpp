#include "gsws/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "gsws/specfun.hpp"
#include "gsws/wavefunction.hpp"

namespace gsws {

namespace {

constexpr double kEdgeMargin = 1e-6;  // fraction of V0 kept off E = -V0

double residual_from_n1(const ConnectionCoefficients& cc, double kappa_L,
                        Parity parity) {
  const Complex val = cc.n1 * std::exp(Complex(0.0, -kappa_L));
  return parity == Parity::kEven ? val.imag() : val.real();
}

// Energy grid over the well, strictly inside the residual's admissible
// interval: base resolution plus 10x density in the top 1% where
// near-threshold states live.
std::vector<double> well_scan_grid(double v0, int scan_points) {
  std::vector<double> grid;
  const double e_lo = -v0 * (1.0 - 1.1 * kEdgeMargin);
  const double e_split = -0.01 * v0;
  const double e_hi = -1.1 * kEdgeMargin * v0;
  const int n_base = scan_points - scan_points / 10;
  const int n_top = std::max(scan_points / 10, 40);  // 10x density, top 1%
  grid.reserve(n_base + n_top + 2);
  for (int i = 0; i <= n_base; ++i)
    grid.push_back(e_lo + (e_split - e_lo) * i / n_base);
  for (int i = 1; i <= n_top; ++i)
    grid.push_back(e_split + (e_hi - e_split) * i / n_top);
  return grid;
}

std::vector<double> bracket_roots(const std::function<double(double)>& f,
                                  const std::vector<double>& grid) {
  std::vector<double> roots;
  double e_prev = grid.front();
  double f_prev = f(e_prev);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double e = grid[i];
    const double fv = f(e);
    if ((f_prev < 0.0) != (fv < 0.0) || f_prev == 0.0) {
      double a = e_prev, b = e, fa = f_prev;
      while (b - a > 1e-10) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    e_prev = e;
    f_prev = fv;
  }
  return roots;
}

int count_sign_changes(const std::vector<Complex>& psi, Complex phase) {
  // nodes of the (real up to phase) wavefunction; tiny samples skipped
  double peak = 0.0;
  for (const auto& v : psi) peak = std::max(peak, std::abs(v));
  const double floor = 1e-9 * peak;
  int nodes = 0;
  int prev_sign = 0;
  for (const auto& v : psi) {
    const double re = (v * phase).real();
    if (std::abs(re) < floor) continue;
    const int s = re > 0.0 ? 1 : -1;
    if (prev_sign != 0 && s != prev_sign) ++nodes;
    prev_sign = s;
  }
  return nodes;
}

BoundState make_state(const PotentialParams& p, double energy, Parity parity,
                      const BoundOptions& opt, ThetaBranch branch) {
  BoundState st;
  st.parity = parity;
  st.energy = energy;

  const DerivedParams dp =
      derive(p, Complex(energy, 0.0), Regime::kBound, branch);
  // phase: real and positive at x = -L
  const Complex at_ref = wavefunction_raw(p, dp, parity, false, -p.L);
  st.phase = std::abs(at_ref) > 0.0 ? std::conj(at_ref) / std::abs(at_ref)
                                    : Complex(1.0, 0.0);

  const double half = p.L + opt.tail / p.a;
  const int n = std::max(3, opt.x_samples | 1);  // odd count keeps x = 0
  st.x.resize(n);
  st.psi.resize(n);
  for (int i = 0; i < n; ++i) {
    st.x[i] = -half + 2.0 * half * i / (n - 1);
    st.psi[i] = st.phase * wavefunction_raw(p, dp, parity, false, st.x[i]);
  }
  st.nodes = count_sign_changes(st.psi, Complex(1.0, 0.0));
  st.index = parity == Parity::kEven ? st.nodes / 2 + 1 : (st.nodes + 3) / 2;
  return st;
}

std::vector<BoundState> find_states_with(
    const PotentialParams& p, const BoundOptions& opt, ThetaBranch branch,
    const std::function<double(double, Parity)>& residual) {
  p.validate();
  std::vector<BoundState> out;
  if (!(p.v0 > 0.0)) return out;  // no attractive region, no spectrum

  const auto grid = well_scan_grid(p.v0, opt.scan_points);
  for (Parity parity : {Parity::kEven, Parity::kOdd}) {
    const auto roots = bracket_roots(
        [&](double e) { return residual(e, parity); }, grid);
    for (double e : roots) out.push_back(make_state(p, e, parity, opt, branch));
  }
  std::sort(out.begin(), out.end(),
            [](const BoundState& a, const BoundState& b) {
              return a.energy < b.energy;
            });
  return out;
}

}  // namespace

double bound_residual(const PotentialParams& p, double energy, Parity parity,
                      ThetaBranch branch) {
  // kappa = 0 (E = -V0) and E = 0 are degenerate; keep a margin off both
  if (!(energy > -p.v0 * (1.0 - kEdgeMargin)) ||
      !(energy < -kEdgeMargin * p.v0))
    throw DomainError(
        "bound_residual: E must lie strictly inside (-V0(1-1e-6), -1e-6 V0)");
  const DerivedParams dp =
      derive(p, Complex(energy, 0.0), Regime::kBound, branch);
  const auto cc = connection_coefficients(dp);
  if (std::abs(cc.n2 - std::conj(cc.n1)) > 1e-12 * std::abs(cc.n1))
    throw ConsistencyError("bound_residual: N2 != conj(N1)");
  return residual_from_n1(cc, dp.kappa.real() * p.L, parity);
}

std::vector<BoundState> find_bound_states(const PotentialParams& p,
                                          const BoundOptions& opt,
                                          ThetaBranch branch) {
  return find_states_with(p, opt, branch, [&](double e, Parity parity) {
    return bound_residual(p, e, parity, branch);
  });
}

Complex bound_wavefunction(const PotentialParams& p, const BoundState& state,
                           double x, ThetaBranch branch) {
  const DerivedParams dp =
      derive(p, Complex(state.energy, 0.0), Regime::kBound, branch);
  return state.phase * wavefunction_raw(p, dp, state.parity, false, x);
}

std::vector<BoundState> find_bound_states_exact(const PotentialParams& p,
                                                const BoundOptions& opt,
                                                ThetaBranch branch) {
  return find_states_with(p, opt, branch, [&](double e, Parity parity) {
    const DerivedParams dp = derive(p, Complex(e, 0.0), Regime::kBound, branch);
    const BoundaryValues bv = boundary_values(p, dp);
    // u e^{-i pi nu} is real in the bound regime; drop the constant phase
    // and check the leakage.
    const Complex rot = std::exp(-Complex(0.0, 1.0) *
                                 Complex(std::numbers::pi, 0.0) * dp.nu);
    const Complex val = (parity == Parity::kEven ? bv.du : bv.u) * rot;
    const Complex ref = (parity == Parity::kEven ? bv.u : bv.du) * rot;
    const double scale = std::max(std::abs(val), std::abs(ref));
    if (std::abs(val.imag()) > 1e-9 * scale)
      throw ConsistencyError("find_bound_states_exact: residual not real");
    return val.real();
  });
}

}  // namespace gsws
