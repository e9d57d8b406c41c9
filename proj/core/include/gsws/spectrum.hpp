#pragma once

#include <vector>

#include "gsws/model.hpp"

namespace gsws {

/// A bound level with its sampled (unnormalized) wavefunction. The global
/// phase makes psi real and positive at x = -L; after that, even states
/// satisfy psi(-x) = psi(x) and odd states psi(-x) = -psi(x), psi(0) = 0.
struct BoundState {
  int index = 0;   // node-derived label: even n = nodes/2+1, odd n = (nodes+3)/2
  Parity parity = Parity::kEven;
  double energy = 0.0;  // MeV, in (-V0, 0)
  int nodes = 0;
  Complex phase{1.0, 0.0};  // global phase factor applied to the closed form
  std::vector<double> x;    // fm
  std::vector<Complex> psi;
};

struct BoundOptions {
  int scan_points = 4000;  // base energy grid over (-V0, 0)
  int x_samples = 801;     // wavefunction sample count (odd keeps x = 0)
  double tail = 30.0;      // sample window half-width is L + tail/a
};

/// Real matching residual whose zeros are the bound levels of the given
/// parity: Im(N1 e^{-i kappa_n L}) for even states (derivative continuity
/// with D1 = D3), Re(N1 e^{-i kappa_n L}) for odd (value continuity with
/// D1 = -D3); equivalent to N1 e^{-i kappa L} -+ N2 e^{i kappa L} = 0 since
/// N2 = conj(N1) here. The conjugacy is asserted to 1e-12 before the
/// reduction (ConsistencyError on failure).
double bound_residual(const PotentialParams& p, double energy, Parity parity,
                      ThetaBranch branch = ThetaBranch::kPlus);

/// All bound levels, both parities, sorted by energy. Scans (-V0, 0) with
/// the top 1% of the well sampled at 10x density (near-threshold states),
/// bisects each bracket, then attaches sampled wavefunctions, node counts
/// and labels. Empty when the well supports no state.
std::vector<BoundState> find_bound_states(const PotentialParams& p,
                                          const BoundOptions& opt = {},
                                          ThetaBranch branch = ThetaBranch::kPlus);

/// Closed-form wavefunction of a found state at arbitrary x (phase applied).
Complex bound_wavefunction(const PotentialParams& p, const BoundState& state,
                           double x, ThetaBranch branch = ThetaBranch::kPlus);

/// Bound levels from exact continuity matching of the closed-form solutions
/// at x = 0 (no aL >> 1 reduction): even levels solve u'(0) = 0, odd levels
/// u(0) = 0. These agree with Numerov integration uniformly in aL and differ
/// from find_bound_states by O(e^{-aL}) shifts.
std::vector<BoundState> find_bound_states_exact(const PotentialParams& p,
                                                const BoundOptions& opt = {},
                                                ThetaBranch branch = ThetaBranch::kPlus);

}  // namespace gsws
