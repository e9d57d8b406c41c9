#pragma once

#include <functional>
#include <vector>

#include "gsws/model.hpp"
#include "gsws/scattering.hpp"

namespace gsws {

/// Symmetric fixed-step grid for the direct integrations. The step bound
/// keeps the 4th-order schemes well inside their stability/accuracy range.
struct IntegrationGrid {
  double x_min = 0.0;
  double x_max = 0.0;
  double step = 0.0;
  std::size_t samples = 0;

  /// x_max = L + 20/a (potential below e^{-20} max(V0,W0) outside),
  /// step = min(0.01/a, lambda_min/40) for energies up to e_max.
  static IntegrationGrid recommended(const PotentialParams& p, double e_max);

  /// Same domain with the step halved (grid-stability checks).
  IntegrationGrid halved() const;

  void validate(const PotentialParams& p) const;
};

using PotentialFn = std::function<double(double)>;

/// R, T for an arbitrary potential by fixed-step RK4 integration: start at
/// x_max with a pure transmitted wave e^{ikx}, integrate backward, and
/// decompose value/derivative at x_min into incident and reflected plane
/// waves. R + T = 1 is reported as the unitarity_defect diagnostic, never
/// assumed. two_m is 2m/hbar^2 in MeV^-1 fm^-2.
ScatteringResult integrate_rt(const PotentialFn& potential, double two_m,
                              double energy, const IntegrationGrid& grid);

/// integrate_rt with the GSWS potential.
ScatteringResult oracle_rt(const PotentialParams& p, double energy,
                           const IntegrationGrid& grid);

struct OracleBoundState {
  double energy = 0.0;
  int nodes = 0;
  Parity parity = Parity::kEven;
};

/// Bound spectrum of an arbitrary symmetric potential by Numerov shooting:
/// integrate from both tails with decaying initial data, locate the zeros of
/// the matching Wronskian at x = 0, infer parity from the converged
/// solution. v_floor is the lower edge of the energy scan (the well bottom).
std::vector<OracleBoundState> integrate_bound(const PotentialFn& potential,
                                              double two_m, double v_floor,
                                              const IntegrationGrid& grid);

/// integrate_bound with the GSWS potential (scans (-V0, 0)).
std::vector<OracleBoundState> oracle_bound(const PotentialParams& p,
                                           const IntegrationGrid& grid);

/// Probability current (hbar/2mi)(phi* phi' - phi phi'*) in units of c.
/// A plane wave e^{ikx} carries hbarc k / mc2.
double probability_current(const PotentialParams& p, Complex phi,
                           Complex dphi);

}  // namespace gsws
