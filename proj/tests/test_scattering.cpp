#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gsws/scattering.hpp"

using namespace gsws;

namespace {

PotentialParams reference_params() {
  PotentialParams p;
  p.v0 = 100.0;
  p.w0 = 250.0;
  p.a = 1.0;
  p.L = 6.0;
  return p;
}

// golden-section maximum of T on [lo, hi]
double t_peak(const PotentialParams& p, double lo, double hi) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - phi * (b - a), d = a + phi * (b - a);
  double fc = reflection_transmission(p, c).t;
  double fd = reflection_transmission(p, d).t;
  while (b - a > 1e-7) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = reflection_transmission(p, c).t;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = reflection_transmission(p, d).t;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("amplitude ratios: total reflection at threshold") {
  PotentialParams p = reference_params();
  const auto ar = amplitude_ratios(p, 1e-3);
  CHECK(std::abs(ar.d2_over_d1) > 0.999);
}

TEST_CASE("amplitude ratios: modulus-square sum is 1 on a grid") {
  PotentialParams p = reference_params();
  for (int i = 0; i < 60; ++i) {
    const double e = 0.5 + i * (79.0 / 59.0);
    const auto ar = amplitude_ratios(p, e);
    const double sum = std::norm(ar.d2_over_d1) + std::norm(ar.d4_over_d1);
    CHECK(std::abs(sum - 1.0) <= 1e-10);
  }
}

TEST_CASE("amplitude ratios: vanishing reflection at the first resonance") {
  PotentialParams p = reference_params();
  const auto ar = amplitude_ratios(p, 15.4913);
  CHECK(std::abs(ar.d2_over_d1) < 1e-4);
}

TEST_CASE("reflection/transmission: limits and reference energies") {
  PotentialParams p = reference_params();

  SUBCASE("deep tunneling: R ~ 1, T ~ 0") {
    const auto rt = reflection_transmission(p, 2.0);
    CHECK(rt.r > 0.999);
    CHECK(rt.t < 1e-3);
  }
  SUBCASE("T = 1 at the listed resonances") {
    CHECK(reflection_transmission(p, 30.6153).t ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(reflection_transmission(p, 15.4913).t ==
          doctest::Approx(1.0).epsilon(1e-6));
  }
  SUBCASE("far above the barrier T approaches 1") {
    CHECK(reflection_transmission(p, 225.0).t > 0.99999);
  }
  SUBCASE("unitarity defect is tiny") {
    for (double e : {0.7, 11.0, 33.0, 61.0})
      CHECK(reflection_transmission(p, e).unitarity_defect <= 1e-12);
  }
  SUBCASE("energy domain") {
    CHECK_THROWS_AS(reflection_transmission(p, -1.0), DomainError);
  }
}

TEST_CASE("left/right incidence gives identical coefficients") {
  PotentialParams p = reference_params();
  for (double e : {3.0, 15.4913, 24.0, 47.0}) {
    const auto lhs = reflection_transmission(p, e);
    const auto rhs = reflection_transmission_mirrored(p, e);
    CHECK(std::abs(lhs.r - rhs.r) <= 1e-12);
    CHECK(std::abs(lhs.t - rhs.t) <= 1e-12);
  }
}

TEST_CASE("resonance residual: real, vanishing exactly at T = 1") {
  PotentialParams p = reference_params();
  // residual crosses zero at the first resonance
  CHECK(std::abs(resonance_residual(p, 15.4913)) < 1e-3);
  // sign change between 10 and 20 MeV (the T peak near 15.49)
  CHECK(resonance_residual(p, 10.0) * resonance_residual(p, 20.0) < 0.0);
}

TEST_CASE("find_resonances: the three reference energies") {
  PotentialParams p = reference_params();
  const auto res = find_resonances(p, 1e-3, 60.0);
  REQUIRE(res.size() == 3);
  CHECK(std::abs(res[0] - 15.4913) <= 0.01);
  CHECK(std::abs(res[1] - 30.6153) <= 0.01);
  CHECK(std::abs(res[2] - 50.37) <= 0.05);
  for (double e : res)
    CHECK(reflection_transmission(p, e).t >= 1.0 - 1e-6);
}

TEST_CASE("find_resonances: empty window below the first resonance") {
  PotentialParams p = reference_params();
  CHECK(find_resonances(p, 0.1, 9.0).empty());
  CHECK_THROWS_AS(find_resonances(p, -1.0, 5.0), DomainError);
  CHECK_THROWS_AS(find_resonances(p, 5.0, 5.0), DomainError);
}

TEST_CASE("find_resonances: roots coincide with T-curve peaks") {
  PotentialParams p = reference_params();
  const auto res = find_resonances(p, 1e-3, 60.0);
  REQUIRE(res.size() == 3);
  for (double e : res) {
    const double peak = t_peak(p, e - 1.5, e + 1.5);
    CHECK(std::abs(peak - e) <= 1e-3);
  }
}

TEST_CASE("exact matching R,T: unitary and close to the closed form") {
  PotentialParams p = reference_params();
  for (double e : {5.0, 20.0, 40.0}) {
    const auto ex = reflection_transmission_exact(p, e);
    CHECK(ex.unitarity_defect <= 1e-10);
    // the closed-form values carry the O(e^{-aL}) matching shift
    CHECK(std::abs(ex.t - reflection_transmission(p, e).t) < 0.05);
  }
}

TEST_CASE("sweep: energy axis reproduces resonance peaks and unitarity") {
  PotentialParams p = reference_params();
  const auto rows = sweep(p, SweepAxis::kEnergy, 0.1, 60.0, 600);
  REQUIRE(rows.size() == 600);
  int peaks = 0;
  for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
    CHECK(rows[i].ok);
    CHECK(std::abs(rows[i].r + rows[i].t - 1.0) <= 1e-10);
    if (rows[i].t > rows[i - 1].t && rows[i].t > rows[i + 1].t &&
        rows[i].t > 0.999)
      ++peaks;
  }
  CHECK(peaks == 3);
}

TEST_CASE("sweep: small W0 transmits, small V0 reflects") {
  PotentialParams p = reference_params();
  const auto w_rows = sweep(p, SweepAxis::kW0, 1.0, 400.0, 40, 20.0);
  CHECK(w_rows.front().t > 0.99);
  CHECK(w_rows.front().hb_defined == false);  // W0 < V0, no barrier
  const auto v_rows = sweep(p, SweepAxis::kV0, 0.5, 200.0, 40, 20.0);
  CHECK(v_rows.front().r > 0.999);
  CHECK(v_rows.front().hb_defined == true);
  CHECK(v_rows.front().hb ==
        doctest::Approx((0.5 - 250.0) * (0.5 - 250.0) / 1000.0)
            .epsilon(1e-12));
}

TEST_CASE("sweep: per-point failures are flagged rows, not aborts") {
  PotentialParams p = reference_params();
  const auto rows = sweep(p, SweepAxis::kA, -0.5, 2.0, 6, 20.0);
  REQUIRE(rows.size() == 6);
  CHECK_FALSE(rows.front().ok);   // a <= 0 is invalid
  CHECK_FALSE(rows.front().error.empty());
  CHECK(rows.back().ok);
  CHECK_THROWS_AS(sweep(p, SweepAxis::kEnergy, 0.1, 60.0, 1), DomainError);
  CHECK_THROWS_AS(sweep(p, SweepAxis::kA, 0.5, 2.0, 10), DomainError);
}

TEST_CASE("sweep: energy axis starts above the degenerate origin") {
  PotentialParams p = reference_params();
  const auto rows = sweep(p, SweepAxis::kEnergy, 0.0, 1.0, 5);
  CHECK(rows.front().axis_value >= 1e-3);
  CHECK(rows.front().ok);
}
