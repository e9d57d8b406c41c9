#include "gsws/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "gsws/scattering.hpp"
#include "gsws/specfun.hpp"
#include "gsws/wavefunction.hpp"

namespace gsws {

namespace {

constexpr double kLinkageWindow = 0.5;  // MeV, resonance <-> quasi-bound
constexpr double kMinWidth = 1e-10;     // reject roots pinned to the real axis

using ResidualFn = std::function<Complex(Complex)>;

bool in_domain(Complex e) { return e.real() > 0.0 && e.imag() <= 0.0; }

struct MullerOutcome {
  Complex root;
  bool converged = false;
};

// Derivative-free Muller iteration with step damping at the domain edge.
MullerOutcome muller(const ResidualFn& f, Complex seed, int max_iter) {
  const double h = std::max(1e-3, 1e-6 * std::abs(seed));
  Complex x0 = seed + h;
  Complex x1 = seed + Complex(0.3 * h, -0.7 * h);
  Complex x2 = seed;
  Complex f0 = f(x0), f1 = f(x1), f2 = f(x2);
  const double f_seed = std::abs(f2);

  for (int it = 0; it < max_iter; ++it) {
    const Complex d01 = (f0 - f1) / (x0 - x1);
    const Complex d12 = (f1 - f2) / (x1 - x2);
    const Complex d02 = (f0 - f2) / (x0 - x2);
    const Complex w = d12 + d02 - d01;
    const Complex curv = (d01 - d12) / (x0 - x2);
    if (w == Complex(0.0, 0.0) && curv == Complex(0.0, 0.0)) break;
    Complex r = std::sqrt(w * w - 4.0 * f2 * curv);
    if (std::abs(w - r) > std::abs(w + r)) r = -r;
    Complex dx = -2.0 * f2 / (w + r);

    Complex next = x2 + dx;
    int damp = 0;
    while (!in_domain(next) && damp < 60) {
      dx *= 0.5;
      next = x2 + dx;
      ++damp;
    }
    if (!in_domain(next)) break;

    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    x2 = next;
    f2 = f(x2);
    if (std::abs(dx) < 1e-8 && std::abs(f2) <= 1e-10 * f_seed)
      return {x2, true};
  }
  return {x2, false};
}

std::vector<Complex> collect_seeds(const PotentialParams& p, Parity parity,
                                   double e_lo, double e_hi,
                                   const QuasiBoundOptions& opt,
                                   ThetaBranch branch,
                                   const std::vector<double>& resonances) {
  std::vector<Complex> seeds;
  for (double e : resonances) seeds.emplace_back(e, -0.1);

  // coarse |residual| minima along the real axis catch broad states
  const int n = std::max(8, opt.minima_scan_points);
  std::vector<double> mag(n);
  std::vector<double> es(n);
  for (int i = 0; i < n; ++i) {
    es[i] = e_lo + (e_hi - e_lo) * (i + 0.5) / n;
    mag[i] = std::abs(
        quasibound_residual(p, Complex(es[i], 0.0), parity, branch));
  }
  for (int i = 1; i + 1 < n; ++i)
    if (mag[i] < mag[i - 1] && mag[i] < mag[i + 1])
      seeds.emplace_back(es[i], -0.05);
  return seeds;
}

QuasiBoundState make_state(const PotentialParams& p, Complex root,
                           Parity parity, const QuasiBoundOptions& opt,
                           ThetaBranch branch,
                           const std::vector<double>& resonances) {
  QuasiBoundState st;
  st.parity = parity;
  st.e_r = root.real();
  st.e_i = -root.imag();

  try {
    st.over_barrier = st.e_r >= barrier_height(p);
  } catch (const DomainError&) {
    st.over_barrier = true;  // no surface barrier, nothing confines the state
  }
  for (double e : resonances)
    if (std::abs(e - st.e_r) <= kLinkageWindow &&
        (!st.linked_resonance ||
         std::abs(e - st.e_r) < std::abs(*st.linked_resonance - st.e_r)))
      st.linked_resonance = e;

  const DerivedParams dp = derive(p, root, Regime::kQuasiBound, branch);
  const Complex at_ref = wavefunction_raw(p, dp, parity, true, -p.L);
  st.phase = std::abs(at_ref) > 0.0 ? std::conj(at_ref) / std::abs(at_ref)
                                    : Complex(1.0, 0.0);

  const double half = p.L + opt.tail / p.a;
  const int n = std::max(3, opt.x_samples | 1);
  st.x.resize(n);
  st.psi.resize(n);
  for (int i = 0; i < n; ++i) {
    st.x[i] = -half + 2.0 * half * i / (n - 1);
    st.psi[i] = st.phase * wavefunction_raw(p, dp, parity, true, st.x[i]);
  }
  return st;
}

std::vector<QuasiBoundState> search(const PotentialParams& p, Parity parity,
                                    double e_lo, double e_hi,
                                    const QuasiBoundOptions& opt,
                                    std::vector<Complex>* failed_seeds,
                                    ThetaBranch branch,
                                    const ResidualFn& residual) {
  p.validate();
  if (!(e_lo > 0.0) || !(e_hi > e_lo))
    throw DomainError("find_quasibound: requires 0 < e_lo < e_hi");

  const auto resonances = find_resonances(p, e_lo, e_hi, branch);
  const auto seeds =
      collect_seeds(p, parity, e_lo, e_hi, opt, branch, resonances);

  std::vector<Complex> roots;
  for (const Complex& seed : seeds) {
    const auto out = muller(residual, seed, opt.max_iterations);
    if (!out.converged) {
      if (failed_seeds) failed_seeds->push_back(seed);
      continue;
    }
    const Complex r = out.root;
    if (r.real() < e_lo || r.real() > e_hi || -r.imag() <= kMinWidth)
      continue;
    const bool dup = std::any_of(roots.begin(), roots.end(), [&](Complex q) {
      return std::abs(q - r) < opt.dedup_tol;
    });
    if (!dup) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end(),
            [](Complex a, Complex b) { return a.real() < b.real(); });

  std::vector<QuasiBoundState> states;
  states.reserve(roots.size());
  for (const Complex& r : roots)
    states.push_back(make_state(p, r, parity, opt, branch, resonances));
  for (std::size_t i = 0; i < states.size(); ++i)
    states[i].index = static_cast<int>(i) + 1;
  return states;
}

}  // namespace

Complex quasibound_residual(const PotentialParams& p, Complex energy,
                            Parity parity, ThetaBranch branch) {
  const DerivedParams dp = derive(p, energy, Regime::kQuasiBound, branch);
  const auto cc = connection_coefficients(dp);
  const Complex ikL = Complex(0.0, 1.0) * dp.kappa * p.L;
  const Complex t3 = cc.log_n3 - ikL;
  const Complex t4 = cc.log_n4 + ikL;
  const double scale = 0.5 * (t3.real() + t4.real());
  const Complex term3 = std::exp(t3 - scale);
  const Complex term4 = std::exp(t4 - scale);
  return parity == Parity::kEven ? term3 - term4 : term3 + term4;
}

std::vector<QuasiBoundState> find_quasibound(const PotentialParams& p,
                                             Parity parity, double e_lo,
                                             double e_hi,
                                             const QuasiBoundOptions& opt,
                                             std::vector<Complex>* failed_seeds,
                                             ThetaBranch branch) {
  return search(p, parity, e_lo, e_hi, opt, failed_seeds, branch,
                [&](Complex e) {
                  return quasibound_residual(p, e, parity, branch);
                });
}

Complex quasibound_wavefunction(const PotentialParams& p,
                                const QuasiBoundState& state, double x,
                                const QuasiBoundOptions& opt,
                                ThetaBranch branch) {
  if (std::abs(x) > p.L + opt.tail / p.a)
    throw DomainError(
        "quasibound_wavefunction: |x| beyond the Gamow tail cutoff");
  const DerivedParams dp = derive(p, Complex(state.e_r, -state.e_i),
                                  Regime::kQuasiBound, branch);
  return state.phase * wavefunction_raw(p, dp, state.parity, true, x);
}

std::vector<QuasiBoundState> find_quasibound_exact(
    const PotentialParams& p, Parity parity, double e_lo, double e_hi,
    const QuasiBoundOptions& opt, std::vector<Complex>* failed_seeds,
    ThetaBranch branch) {
  return search(p, parity, e_lo, e_hi, opt, failed_seeds, branch,
                [&](Complex e) {
                  const DerivedParams dp =
                      derive(p, e, Regime::kQuasiBound, branch);
                  const BoundaryValues bv = boundary_values(p, dp);
                  return parity == Parity::kEven ? bv.dv : bv.v;
                });
}

}  // namespace gsws
