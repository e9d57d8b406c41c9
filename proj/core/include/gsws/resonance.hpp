#pragma once

#include <optional>
#include <vector>

#include "gsws/model.hpp"

namespace gsws {

/// A quasi-bound (Gamow) state, E = e_r - i e_i with e_r, e_i > 0. States
/// with e_r at or above the barrier height are reported with over_barrier
/// set instead of being dropped: they solve the same matching condition but
/// the particle is not trapped by the surface barrier.
struct QuasiBoundState {
  int index = 0;  // 1-based rank within parity, ordered by e_r
  Parity parity = Parity::kEven;
  double e_r = 0.0;
  double e_i = 0.0;
  bool over_barrier = false;
  std::optional<double> linked_resonance;  // transmission resonance <= 0.5 MeV away
  Complex phase{1.0, 0.0};
  std::vector<double> x;
  std::vector<Complex> psi;
};

struct QuasiBoundOptions {
  int max_iterations = 200;
  int x_samples = 801;
  double tail = 15.0;         // wavefunction window half-width is L + tail/a
  double dedup_tol = 1e-4;    // MeV; closer roots are merged
  int minima_scan_points = 400;
};

/// Complex matching determinant of the outgoing-wave (Gamow) problem:
///   even:  N3 e^{-i kappa L} - N4 e^{i kappa L}   (derivative continuity)
///   odd:   N3 e^{-i kappa L} + N4 e^{i kappa L}   (value continuity)
/// scaled by the geometric mean of the two term moduli so that strongly
/// complex energies neither overflow nor underflow; zeros are unchanged.
/// Requires Re E > 0, Im E <= 0 (DomainError otherwise: the growing-state
/// branch E_r + i E_i is excluded by contract).
Complex quasibound_residual(const PotentialParams& p, Complex energy,
                            Parity parity,
                            ThetaBranch branch = ThetaBranch::kPlus);

/// Complex roots of the matching determinant with e_r inside the window.
/// Seeds: each transmission resonance minus 0.1i MeV, plus minima of
/// |residual| on the real axis; Muller iterations from each seed, converged
/// when the step is below 1e-8 MeV and |residual| has dropped below 1e-10 of
/// its seed value. Failed seeds are reported through failed_seeds (if given),
/// never returned. Roots are deduplicated and sorted by e_r.
std::vector<QuasiBoundState> find_quasibound(
    const PotentialParams& p, Parity parity, double e_lo, double e_hi,
    const QuasiBoundOptions& opt = {},
    std::vector<Complex>* failed_seeds = nullptr,
    ThetaBranch branch = ThetaBranch::kPlus);

/// Closed-form Gamow wavefunction of a found state (second hypergeometric
/// solution, mirror-assembled). |x| is limited to L + tail/a: the state
/// grows exponentially beyond (outgoing complex momentum), so larger
/// windows are meaningless. Throws DomainError outside the window.
Complex quasibound_wavefunction(const PotentialParams& p,
                                const QuasiBoundState& state, double x,
                                const QuasiBoundOptions& opt = {},
                                ThetaBranch branch = ThetaBranch::kPlus);

/// Quasi-bound roots of the exact continuity matching (v'(0) = 0 even,
/// v(0) = 0 odd, with v the exact second solution). Positions differ from
/// find_quasibound by the O(e^{-aL}) matching reduction.
std::vector<QuasiBoundState> find_quasibound_exact(
    const PotentialParams& p, Parity parity, double e_lo, double e_hi,
    const QuasiBoundOptions& opt = {},
    std::vector<Complex>* failed_seeds = nullptr,
    ThetaBranch branch = ThetaBranch::kPlus);

}  // namespace gsws
