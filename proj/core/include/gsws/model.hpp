#pragma once

#include <complex>

#include "gsws/errors.hpp"

namespace gsws {

using Complex = std::complex<double>;

/// Physical inputs of the generalized symmetric Woods-Saxon potential,
/// MeV/fm units with the mass and hbar*c conventions explicit.
struct PotentialParams {
  double v0 = 0.0;        // volume depth (MeV); >0 gives a well
  double w0 = 0.0;        // surface term strength (MeV); >0 gives a barrier
  double a = 1.0;         // diffuseness (fm^-1)
  double L = 6.0;         // half width (fm)
  double mc2 = 940.0;     // particle rest energy (MeV)
  double hbarc = 197.329; // MeV*fm

  // 2m/hbar^2 expressed as 2*mc^2/(hbar c)^2, MeV^-1 fm^-2.
  double two_m_over_hbar2() const { return 2.0 * mc2 / (hbarc * hbarc); }

  // The closed-form matching conditions assume a*L >> 1.
  bool asymptotics_ok() const { return a * L >= 5.0; }

  // Throws DomainError unless a, L, mc2, hbarc are all positive.
  void validate() const;
};

/// Modified Woods-Saxon comparison potential, -V0 / (p + q e^{a(|x|-L)}).
struct MwsParams {
  double v0 = 0.0;
  double a = 1.0;
  double L = 6.0;
  int p = 1;
  int q = 1;

  void validate() const;  // p >= 1, q >= 1, a > 0, L > 0
};

enum class Regime { kScattering, kBound, kQuasiBound };
enum class ThetaBranch { kPlus, kMinus };
enum class Parity { kEven, kOdd };

/// Energy-dependent quantities entering the hypergeometric solution.
/// Invariants: c1 = 1 + 2 mu and a1 + b1 - c1 = 2 nu hold exactly;
/// theta(1-theta) = gamma2 to rounding.
struct DerivedParams {
  Complex energy;
  Complex k;      // sqrt(2mE)/hbar, principal branch, fm^-1
  Complex kappa;  // sqrt(2m(E+V0))/hbar, principal branch, fm^-1
  Complex mu;     // ik/a (scattering, quasi-bound) or k_n/a (bound)
  Complex nu;     // i kappa / a
  Complex theta;  // 1/2 +- sqrt(1/4 - gamma2)
  Complex a1, b1, c1;
  Complex eps2;   // -2mE/(a hbar)^2 = mu^2
  double beta2 = 0.0;   // 2m(V0-W0)/(a hbar)^2
  double gamma2 = 0.0;  // 2m W0/(a hbar)^2
};

/// Piecewise GSWS potential value, MeV. Exactly symmetric in x: the
/// implementation evaluates at |x| once.
double potential_gsws(const PotentialParams& p, double x);

/// MWS potential value, MeV. Reduces to the plain Woods-Saxon for p=q=1.
double potential_mws(const MwsParams& p, double x);

/// Surface barrier height (V0-W0)^2/(4 W0), defined for W0 >= V0 > 0.
/// Throws DomainError ("no barrier") for W0 < V0, W0 <= 0 or V0 <= 0;
/// the boundary W0 == V0 returns 0.
double barrier_height(const PotentialParams& p);

/// All derived quantities for a given energy and regime.
///
/// Admissible energies: scattering, real E > 0; bound, real -V0 <= E < 0;
/// quasi-bound, Re E > 0 and Im E <= 0. Branches: principal square roots
/// throughout, Re(k) > 0 enforced in the quasi-bound regime so that
/// e^{ik(x-L)} is outgoing.
DerivedParams derive(const PotentialParams& p, Complex energy, Regime regime,
                     ThetaBranch branch = ThetaBranch::kPlus);

}  // namespace gsws
