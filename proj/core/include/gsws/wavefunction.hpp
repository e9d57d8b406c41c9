#pragma once

#include "gsws/model.hpp"
#include "gsws/specfun.hpp"

namespace gsws {

/// Values and x-derivatives at x = 0 of the two independent closed-form
/// solutions on the x < 0 side,
///   u = z^mu (z-1)^nu 2F1(a1,b1,c1;z),
///   v = z^-mu (z-1)^nu 2F1(1+a1-c1,1+b1-c1,2-c1;z),
/// with z = [1+e^{-a(x+L)}]^{-1} and (z-1)^nu = e^{i pi nu}(1-z)^nu.
/// The x > 0 solutions are the mirror images u(-x), v(-x), so these four
/// numbers carry the full continuity matching.
struct BoundaryValues {
  Complex u, du, v, dv;
};

BoundaryValues boundary_values(const PotentialParams& p,
                               const DerivedParams& dp);

/// Mirror-assembled closed-form solution sampled at x: the x < 0 branch
/// evaluated at z(|arg|) and reflected with the parity sign for x > 0.
/// second_solution selects v (the quasi-bound assembly) instead of u (the
/// bound assembly). Odd assemblies return exactly 0 at x = 0 (antisymmetric
/// midpoint value).
Complex wavefunction_raw(const PotentialParams& p, const DerivedParams& dp,
                         Parity parity, bool second_solution, double x);

}  // namespace gsws
