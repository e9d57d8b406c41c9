#pragma once

#include <complex>
#include <cstddef>

#include "gsws/errors.hpp"
#include "gsws/model.hpp"

namespace gsws {

/// log Gamma(z) for complex z, Stirling series with upward recurrence and
/// the reflection formula for Re z < 1/2. exp(log_gamma(z)) equals Gamma(z);
/// the imaginary part may differ from the principal branch by 2*pi*n after
/// reflection. Throws PoleError at non-positive integers.
Complex log_gamma(Complex z);

struct Hyp2f1Options {
  double tol = 1e-14;            // relative series tolerance
  std::size_t max_terms = 100000;  // cap; breach throws ConvergenceError
};

/// Gauss hypergeometric 2F1(a,b,c;z) for complex parameters and real
/// z in [0,1). Direct power series for z <= 1/2; the z -> 1-z connection
/// formula above. Throws PoleError when c is a non-positive integer,
/// DegenerateCaseError when the connection formula would need the
/// logarithmic c-a-b -> integer case.
Complex hyp2f1(Complex a, Complex b, Complex c, double z,
               const Hyp2f1Options& opt = {});

/// 2F1(a,b,c;1-w) through the z -> 1-z connection formula, evaluated from
/// w = 1-z directly to avoid the cancellation in forming 1-z when z is
/// close to 1. Valid for 0 < w < 1; both sub-series converge at rate w.
Complex hyp2f1_near_unit(Complex a, Complex b, Complex c, double w,
                         const Hyp2f1Options& opt = {});

/// The four Gamma-function ratios of the z -> 1-z connection formula for
/// the GSWS parameter set (a1, b1, c1). For real scattering energies
/// n4 = conj(n1) and n3 = conj(n2); in the bound regime n2 = conj(n1) and
/// n4 = conj(n3).
struct ConnectionCoefficients {
  Complex n1, n2, n3, n4;
  Complex log_n1, log_n2, log_n3, log_n4;
};

/// Computes N1..N4 entirely in the log-Gamma domain (one exponentiation per
/// coefficient). Throws PoleError when kappa = 0 (nu = 0 puts Gamma(+-2nu)
/// at a pole).
ConnectionCoefficients connection_coefficients(const DerivedParams& dp);

}  // namespace gsws
