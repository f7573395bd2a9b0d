#include "kgbound/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "kgbound/coulomb.hpp"
#include "kgbound/errors.hpp"

namespace kgbound {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

double lanczos_positive(double x) {
  // Gamma(x) for x >= 1/2
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  const double half = std::pow(t, (z + 0.5) / 2.0);
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * a;
}

double factorial(int k) { return gamma_fn(static_cast<double>(k) + 1.0); }

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw PoleError("gamma argument is not finite");
  if (x <= 0.0 && x == std::floor(x)) {
    std::ostringstream os;
    os << "gamma pole at x = " << x;
    throw PoleError(os.str());
  }
  if (x < 0.5) {
    return std::numbers::pi / (std::sin(std::numbers::pi * x) * lanczos_positive(1.0 - x));
  }
  return lanczos_positive(x);
}

double eta_product(int l, int nu, double z_alpha, double sigma_l) {
  const double za2 = z_alpha * z_alpha;
  double eta = 1.0;
  for (int k = 1; k <= nu; ++k) {
    eta *= 1.0 + za2 / ((k - sigma_l) * (2.0 * l + 1.0 + k - sigma_l));
  }
  return eta;
}

double series_coefficient_ratio(double s, int nu, double beta, int l, double z_alpha) {
  const double sn = s + nu;
  const double ll = static_cast<double>(l) * (l + 1);
  const double za2 = z_alpha * z_alpha;
  const double den = sn * (sn + 1.0) - ll + za2;
  const double scale = std::abs(sn * (sn + 1.0)) + ll + za2;
  if (std::abs(den) <= 1e-14 * scale) {
    std::ostringstream os;
    os << "degenerate recurrence: s=" << s << " nu=" << nu << " l=" << l
       << " z_alpha=" << z_alpha;
    throw DegenerateRecurrence(os.str());
  }
  return (sn - beta) / den;
}

double horner(std::span<const double> coefficients, double x) noexcept {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double LaguerreRel::derivative(double rho) const noexcept {
  double acc = 0.0;
  for (std::size_t k = coefficients.size(); k-- > 1;) {
    acc = acc * rho + static_cast<double>(k) * coefficients[k];
  }
  return acc;
}

LaguerreRel laguerre_rel(const PhysicalParams& p, int n, int l) {
  validate_params(p, QuantumNumbers(n, l));
  LaguerreRel out;
  out.n = n;
  out.l = l;
  out.z_alpha = p.z_alpha();
  out.sigma_l = sigma_closed(p, l).sigma_l;
  const double sigma = out.sigma_l;
  const double fact = factorial(n + l);
  const double num = fact * fact;
  const int terms = n - l;
  out.coefficients.resize(static_cast<std::size_t>(terms));
  for (int nu = 0; nu < terms; ++nu) {
    const double sign = (nu % 2 == 0) ? -1.0 : 1.0;  // (-1)^{nu+1}
    const double den = factorial(n - l - 1 - nu) * gamma_fn(2.0 * l + nu + 2.0 - sigma) *
                       gamma_fn(nu + 1.0 - sigma) * eta_product(l, nu, out.z_alpha, sigma);
    out.coefficients[static_cast<std::size_t>(nu)] = sign * num / den;
  }
  return out;
}

std::vector<double> laguerre_classical(int n, int l) {
  QuantumNumbers qn(n, l);
  const double fact = factorial(n + l);
  const int terms = n - l;
  std::vector<double> c(static_cast<std::size_t>(terms));
  for (int nu = 0; nu < terms; ++nu) {
    const double sign = (nu % 2 == 0) ? -1.0 : 1.0;
    c[static_cast<std::size_t>(nu)] =
        sign * fact * fact / (factorial(n - l - 1 - nu) * factorial(2 * l + nu + 1) * factorial(nu));
  }
  return c;
}

}  // namespace kgbound
