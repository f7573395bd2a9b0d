#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "kgbound/coulomb.hpp"
#include "kgbound/errors.hpp"
#include "kgbound/quadrature.hpp"
#include "kgbound/wavefunction.hpp"

using namespace kgbound;

namespace {

PhysicalParams with_za(double za) { return PhysicalParams::natural(1.0, za); }

// Textbook hydrogen R_nl with the rest-mass Bohr radius.
double hydrogen_radial(const PhysicalParams& p, int n, int l, double r) {
  const double a = p.bohr_radius() / p.z_number;
  const double k = 2.0 / (n * a);
  const double rho = k * r;
  const double norm = std::sqrt(k * k * k * std::tgamma(n - l) / (2.0 * n * std::tgamma(n + l + 1.0)));
  return norm * std::exp(-rho / 2) * std::pow(rho, l) *
         std::assoc_laguerre(static_cast<unsigned>(n - l - 1), static_cast<unsigned>(2 * l + 1), rho);
}

}  // namespace

TEST_CASE("weak coupling reproduces hydrogen radial functions") {
  const PhysicalParams p = with_za(1e-6);
  for (int n = 1; n <= 4; ++n) {
    for (int l = 0; l < n; ++l) {
      const RadialWavefunction wf = build_radial(p, n, l);
      const RadialGrid g = RadialGrid::log_uniform(1e-3 * wf.length_scale(), 80.0 * n * wf.length_scale(), 500);
      double peak = 0.0;
      double worst = 0.0;
      for (double r : g.points()) {
        const double h = hydrogen_radial(p, n, l, r);
        peak = std::max(peak, std::abs(h));
        worst = std::max(worst, std::abs(wf(r) - h));
      }
      CHECK(worst / peak < 1e-5);
    }
  }
}

TEST_CASE("ground state at Z alpha = 1e-3 against R_10 = 2 a^{-3/2} e^{-r/a}") {
  const PhysicalParams p = with_za(1e-3);
  const RadialWavefunction wf = build_radial(p, 1, 0);
  const double a = p.bohr_radius();
  const double peak = 2.0 / std::pow(a, 1.5);
  for (double x : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double r = x * a;
    CHECK(std::abs(wf(r) - 2.0 / std::pow(a, 1.5) * std::exp(-r / a)) / peak < 1e-5);
  }
}

TEST_CASE("normalization by independent quadrature") {
  for (double za : {1e-6, 0.1, 0.3}) {
    const PhysicalParams p = with_za(za);
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l < n; ++l) {
        const RadialWavefunction wf = build_radial(p, n, l);
        const double L = wf.length_scale();
        const QuadratureResult q = integrate_adaptive(
            [&](double r) { return wf(r) * wf(r) * r * r; }, 0.0, (80.0 + 10.0 * n) * L, 1e-14, 64);
        CHECK(q.value == doctest::Approx(1.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("sign convention and node count") {
  const PhysicalParams p = with_za(0.2);
  for (int n = 1; n <= 6; ++n) {
    for (int l = 0; l < n; ++l) {
      const RadialWavefunction wf = build_radial(p, n, l);
      CHECK(wf(1e-6 * wf.length_scale()) > 0.0);
      const RadialGrid g = residual_reference_grid(wf, 4000);
      CHECK(count_sign_changes(sample(wf, g)) == n - l - 1);
    }
  }
}

TEST_CASE("count_sign_changes ignores exact zeros") {
  const std::vector<double> v{1.0, 0.0, -1.0, 0.0, 0.0, -2.0, 3.0};
  CHECK(count_sign_changes(v) == 2);
  CHECK(count_sign_changes(std::vector<double>{}) == 0);
}

TEST_CASE("normalize rescales and checks the tail") {
  const PhysicalParams p = with_za(0.1);
  const RadialWavefunction wf = build_radial(p, 2, 1);
  const RadialGrid g = RadialGrid::log_uniform(1e-5 * wf.length_scale(), 90.0 * wf.length_scale(), 6001);
  std::vector<double> s = sample(wf, g);
  CHECK(normalize(g, s) == doctest::Approx(1.0).epsilon(1e-9));
  for (double& v : s) v *= 2.0;
  CHECK(normalize(g, s) == doctest::Approx(0.5).epsilon(1e-9));

  const RadialGrid short_grid = RadialGrid::log_uniform(1e-5 * wf.length_scale(), 10.0 * wf.length_scale(), 2001);
  CHECK_THROWS_AS(normalize(short_grid, sample(wf, short_grid)), TailNotConverged);
  CHECK_THROWS_AS(normalize(g, std::vector<double>(g.size(), 0.0)), InvalidParams);
}

TEST_CASE("uniform-grid Simpson norm") {
  const PhysicalParams p = with_za(0.1);
  const RadialWavefunction wf = build_radial(p, 1, 0);
  const RadialGrid g = RadialGrid::uniform(60.0 * wf.length_scale(), 20000);
  CHECK(radial_norm(g, sample(wf, g)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("ODE residual is small for the closed form and sensitive to the energy") {
  for (double za : {kFineStructure, 0.1, 0.3}) {
    const PhysicalParams p = with_za(za);
    for (int n = 1; n <= 4; ++n) {
      for (int l = 0; l < n; ++l) {
        const RadialWavefunction wf = build_radial(p, n, l);
        const RadialGrid g = residual_reference_grid(wf);
        const double res = radial_ode_residual(wf, p, g);
        CHECK(res < 1e-6);
        RadialEquationCoefficients eq = radial_equation_coefficients(wf, p);
        eq.energy *= 1.01;
        CHECK(radial_ode_residual([&](double r) { return wf(r); }, eq, g) > 100.0 * res);
      }
    }
  }
}

TEST_CASE("residual converges under grid refinement") {
  const PhysicalParams p = with_za(0.1);
  const RadialWavefunction wf = build_radial(p, 2, 1);
  const double coarse = radial_ode_residual(wf, p, residual_reference_grid(wf, 2000));
  const double fine = radial_ode_residual(wf, p, residual_reference_grid(wf, 4000));
  CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("wavefunction is stable under refinement of its own quadrature grid") {
  // Two independent evaluations of the (2,1) norm on grids differing by 2x.
  const PhysicalParams p = with_za(0.1);
  const RadialWavefunction wf = build_radial(p, 2, 1);
  const double L = wf.length_scale();
  const RadialGrid g1 = RadialGrid::log_uniform(1e-6 * L, 100.0 * L, 10001);
  const RadialGrid g2 = RadialGrid::log_uniform(1e-6 * L, 100.0 * L, 20001);
  const double n1 = radial_norm(g1, sample(wf, g1));
  const double n2 = radial_norm(g2, sample(wf, g2));
  CHECK(std::abs(n1 - n2) < 1e-9);
  CHECK(std::abs(n2 - 1.0) < 1e-9);
}

TEST_CASE("spherical harmonics") {
  const double th = 0.7;
  const double ph = 1.3;
  CHECK(std::abs(spherical_harmonic(0, 0, th, ph) - std::complex<double>(0.5 / std::sqrt(std::numbers::pi))) < 1e-15);
  CHECK(std::abs(spherical_harmonic(1, 0, th, ph) - std::sqrt(3.0 / (4 * std::numbers::pi)) * std::cos(th)) < 1e-15);
  const std::complex<double> y11 = -std::sqrt(3.0 / (8 * std::numbers::pi)) * std::sin(th) * std::polar(1.0, ph);
  CHECK(std::abs(spherical_harmonic(1, 1, th, ph) - y11) < 1e-15);
  // Y_{l,-m} = (-1)^m conj(Y_lm)
  for (int l = 0; l <= 4; ++l) {
    for (int m = 1; m <= l; ++m) {
      const auto a = spherical_harmonic(l, -m, th, ph);
      const auto b = (m % 2 ? -1.0 : 1.0) * std::conj(spherical_harmonic(l, m, th, ph));
      CHECK(std::abs(a - b) < 1e-14);
    }
  }
  CHECK_THROWS_AS(spherical_harmonic(1, 2, th, ph), InvalidQuantumNumbers);
}

TEST_CASE("Y_21 is normalized on the sphere") {
  const GaussRule g = gauss_legendre(32);
  double total = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const double th = std::acos(g.nodes[i]);
    total += g.weights[i] * std::norm(spherical_harmonic(2, 1, th, 0.4)) * 2.0 * std::numbers::pi;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("stationary state in Cartesian form") {
  const PhysicalParams p = with_za(0.1);
  const RadialWavefunction wf = build_radial(p, 2, 1);
  const CartesianField psi = stationary_state(wf, 1);
  const double r = 3.0 * wf.length_scale();
  const double th = 1.1;
  const double ph = -2.0;
  const auto got = psi(r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph), r * std::cos(th));
  CHECK(std::abs(got - wf(r) * spherical_harmonic(1, 1, th, ph)) < 1e-12 * std::abs(got));
  CHECK_THROWS_AS(stationary_state(wf, 2), InvalidQuantumNumbers);
}

TEST_CASE("build_radial validates input") {
  CHECK_THROWS_AS(build_radial(PhysicalParams::natural(70.0), 1, 0), SupercriticalCoupling);
  CHECK_THROWS_AS(build_radial(with_za(0.1), 1, 1), InvalidQuantumNumbers);
}
