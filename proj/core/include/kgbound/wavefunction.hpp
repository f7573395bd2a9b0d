#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "kgbound/core_model.hpp"
#include "kgbound/special_functions.hpp"

namespace kgbound {

/// Normalized closed-form radial function
/// R(r) = N e^{-rho/2} rho^{l - sigma} L(rho), rho = rho_scale * r.
struct RadialWavefunction {
  QuantumNumbers qn{1, 0, 0};
  double rho_scale = 1.0;
  double normalization = 1.0;
  /// +1 or -1, chosen so that R(0+) > 0.
  double sign = 1.0;
  LaguerreRel poly;
  double exponent = 0.0;
  double e_prime = 0.0;
  double system_mass = 1.0;

  double rho(double r) const noexcept { return rho_scale * r; }
  double operator()(double r) const noexcept;
  double u(double r) const noexcept { return r * (*this)(r); }
  /// Characteristic length 1 / rho_scale.
  double length_scale() const noexcept { return 1.0 / rho_scale; }
};

/// Builds and normalizes the state by adaptive quadrature on log panels.
RadialWavefunction build_radial(const PhysicalParams& p, int n, int l);

/// Samples R on a grid.
std::vector<double> sample(const RadialWavefunction& wf, const RadialGrid& grid);

/// N such that the integral of (N R)^2 r^2 over the grid (plus a power-law
/// estimate of the piece below the first point) equals 1.  Throws
/// TailNotConverged unless |r R| at the last point is below 1e-12 of its peak.
double normalize(const RadialGrid& grid, std::span<const double> radial_samples);

/// Integral of R^2 r^2 from sampled R (Simpson on uniform or log grids).
double radial_norm(const RadialGrid& grid, std::span<const double> radial_samples);

/// Interior sign changes, ignoring exact zeros.
int count_sign_changes(std::span<const double> samples) noexcept;

/// R'' + 2R'/r + energy R + coulomb R / r + inverse_square R / r^2 = 0.
struct RadialEquationCoefficients {
  double energy = 0.0;          // (m0 + m) E' / hbar^2
  double coulomb = 0.0;         // 2 m Z e_s^2 / hbar^2
  double inverse_square = 0.0;  // Z^2 e_s^4 / (hbar^2 c^2) - l(l+1)
};

RadialEquationCoefficients radial_equation_coefficients(const RadialWavefunction& wf,
                                                        const PhysicalParams& p);

/// Max |residual| / max |term| with every term multiplied by r; interior
/// points exclude three at each end.
double radial_ode_residual(const RadialWavefunction& wf, const PhysicalParams& p,
                           const RadialGrid& grid);
double radial_ode_residual(const std::function<double(double)>& radial,
                           const RadialEquationCoefficients& eq, const RadialGrid& grid);

/// Log grid from 0.01 a_n to (60 + 8n) a_n with a_n = 1 / rho_scale.
RadialGrid residual_reference_grid(const RadialWavefunction& wf, std::size_t points = 8000);

/// Orthonormal Y_lm with the Condon-Shortley phase.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

/// psi(x, y, z) = R(r) Y_lm(theta, phi).
using CartesianField = std::function<std::complex<double>(double, double, double)>;
CartesianField stationary_state(const RadialWavefunction& wf, int m);

}  // namespace kgbound
