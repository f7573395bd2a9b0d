#pragma once

#include <span>
#include <vector>

#include "kgbound/core_model.hpp"

namespace kgbound {

/// Lanczos gamma (g = 7, 9 terms) with reflection below 1/2.
/// Throws PoleError at non-positive integers.
double gamma_fn(double x);

/// eta(l, nu) = prod_{k=1..nu} (1 + (Z alpha)^2 / ((k - sigma)(2l + 1 + k - sigma))).
double eta_product(int l, int nu, double z_alpha, double sigma_l);

/// b_{nu+1} / b_nu = (s + nu - beta) / ((s + nu)(s + nu + 1) - l(l+1) + (Z alpha)^2).
double series_coefficient_ratio(double s, int nu, double beta, int l, double z_alpha);

/// Evaluates sum_k c[k] x^k.
double horner(std::span<const double> coefficients, double x) noexcept;

/// Relativistic associated Laguerre polynomial as dense coefficients in rho.
struct LaguerreRel {
  int n = 1;
  int l = 0;
  double sigma_l = 0.0;
  double z_alpha = 0.0;
  std::vector<double> coefficients;

  double operator()(double rho) const noexcept { return horner(coefficients, rho); }
  /// d/drho of the polynomial.
  double derivative(double rho) const noexcept;
  int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
};

LaguerreRel laguerre_rel(const PhysicalParams& p, int n, int l);

/// The Z alpha -> 0 limit of laguerre_rel.
std::vector<double> laguerre_classical(int n, int l);

}  // namespace kgbound
