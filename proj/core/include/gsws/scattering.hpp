#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsws/model.hpp"
#include "gsws/specfun.hpp"

namespace gsws {

struct ScatteringResult {
  double energy = 0.0;
  double r = 0.0;
  double t = 0.0;
  double unitarity_defect = 0.0;  // |R + T - 1|
};

/// D2/D1 (reflected/incident) and D4/D1 (transmitted/incident) for a wave
/// incident from the left. |d2|^2 + |d4|^2 = 1 for real E > 0.
struct AmplitudeRatios {
  Complex d2_over_d1;
  Complex d4_over_d1;
};

/// Amplitude ratios from the connection coefficients and the e^{+-2i kappa L}
/// phase factors (kept as unit-modulus factors, kappa real).
AmplitudeRatios amplitude_ratios(const PotentialParams& p, double energy,
                                 ThetaBranch branch = ThetaBranch::kPlus);

/// R and T as squared moduli of the amplitude ratios. The equivalent
/// N-ratio closed forms are evaluated as a cross-check and must agree to
/// 1e-10 (ConsistencyError otherwise).
ScatteringResult reflection_transmission(const PotentialParams& p,
                                         double energy,
                                         ThetaBranch branch = ThetaBranch::kPlus);

/// Same quantities with the incident side exchanged (wave coming from
/// +infinity), obtained by solving the mirrored continuity system. Equal to
/// reflection_transmission for this symmetric potential.
ScatteringResult reflection_transmission_mirrored(
    const PotentialParams& p, double energy,
    ThetaBranch branch = ThetaBranch::kPlus);

/// R and T from exact continuity of the closed-form solutions at x = 0
/// (no aL >> 1 reduction). Agrees with direct integration uniformly in aL;
/// differs from reflection_transmission by O(e^{-aL}) terms.
ScatteringResult reflection_transmission_exact(
    const PotentialParams& p, double energy,
    ThetaBranch branch = ThetaBranch::kPlus);

/// Real-valued transmission-resonance residual,
///   sin(4 kappa L) + (i/2) [ (N1 N3)^2 - (N2 N4)^2 ] / (N1 N2 N3 N4),
/// whose zeros contain all T = 1 energies. The expression is real for real
/// E by the conjugacy relations; an imaginary part above 1e-10 signals an
/// upstream branch error (ConsistencyError).
double resonance_residual(const PotentialParams& p, double energy,
                          ThetaBranch branch = ThetaBranch::kPlus);

/// All transmission resonances in (e_min, e_max): sign changes of the
/// residual refined by bisection, gated by T >= 1 - 1e-4 to drop
/// sin(4 kappa L) crossings that are not T maxima. Sorted ascending.
std::vector<double> find_resonances(const PotentialParams& p, double e_min,
                                    double e_max,
                                    ThetaBranch branch = ThetaBranch::kPlus);

enum class SweepAxis { kEnergy, kV0, kW0, kA, kL };

struct SweepRow {
  double axis_value = 0.0;
  double r = 0.0;
  double t = 0.0;
  double hb = 0.0;     // barrier height for the row's parameters
  bool hb_defined = false;
  bool ok = true;
  std::string error;
};

/// Row-per-step (axis value, R, T, HB) table. Energy sweeps start at
/// max(lo, 1e-3) MeV; per-point failures are flagged rows, not aborts.
std::vector<SweepRow> sweep(const PotentialParams& p, SweepAxis axis,
                            double lo, double hi, int steps,
                            std::optional<double> fixed_energy = {});

}  // namespace gsws
