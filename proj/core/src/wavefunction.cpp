#include "kgbound/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kgbound/coulomb.hpp"
#include "kgbound/errors.hpp"
#include "kgbound/quadrature.hpp"

namespace kgbound {

double RadialWavefunction::operator()(double r) const noexcept {
  const double x = rho(r);
  return sign * normalization * std::exp(-0.5 * x) * std::pow(x, exponent) * poly(x);
}

RadialWavefunction build_radial(const PhysicalParams& p, int n, int l) {
  validate_params(p, QuantumNumbers(n, l));
  RadialWavefunction wf;
  wf.qn = QuantumNumbers(n, l);
  wf.poly = laguerre_rel(p, n, l);
  const double sigma = wf.poly.sigma_l;
  const BoundState level = energy_level(p, n, l);
  wf.e_prime = level.e_prime;
  wf.system_mass = level.system_mass;
  // a0 with the system mass
  const double a0 = p.bohr_radius(wf.system_mass);
  wf.rho_scale = 2.0 * p.z_number / ((n - sigma) * a0);
  wf.exponent = l - sigma;
  wf.sign = wf.poly.coefficients.front() > 0.0 ? 1.0 : -1.0;
  wf.normalization = 1.0;

  const double r_max = 40.0 * n * n * a0 * (n - sigma) / p.z_number;
  const double r_min = 1e-12 * wf.length_scale();
  auto integrand = [&wf](double r) {
    const double v = wf(r);
    return v * v * r * r;
  };
  const QuadratureResult q = integrate_log_panels(integrand, r_min, r_max, 1e-14, 64);
  if (!(q.value > 0.0) || !std::isfinite(q.value)) {
    throw QuadratureFailure("radial norm integral is not positive");
  }
  const double peak = [&] {
    double best = 0.0;
    for (int i = 1; i <= 400; ++i) best = std::max(best, std::abs(wf.u(r_max * i / 400.0)));
    return best;
  }();
  if (std::abs(wf.u(r_max)) > 1e-12 * peak) {
    throw TailNotConverged("radial function has not decayed at r_max");
  }
  wf.normalization = 1.0 / std::sqrt(q.value);
  return wf;
}

std::vector<double> sample(const RadialWavefunction& wf, const RadialGrid& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = wf(grid[i]);
  return out;
}

namespace {

// Composite Simpson over equally spaced values; odd interval counts get a
// closing 3/8 panel.
double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if (n == 3) return h / 3.0 * (f[0] + 4.0 * f[1] + f[2]);
  std::size_t intervals = n - 1;
  std::size_t simpson_end = intervals % 2 == 0 ? n - 1 : n - 4;
  double s = 0.0;
  for (std::size_t i = 0; i + 2 <= simpson_end; i += 2) {
    s += h / 3.0 * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
  }
  if (intervals % 2 == 1) {
    const std::size_t k = n - 4;
    s += 3.0 * h / 8.0 * (f[k] + 3.0 * f[k + 1] + 3.0 * f[k + 2] + f[k + 3]);
  }
  return s;
}

}  // namespace

double radial_norm(const RadialGrid& grid, std::span<const double> radial_samples) {
  if (radial_samples.size() != grid.size()) throw InvalidParams("sample count does not match grid");
  if (grid.size() < 4) throw InvalidParams("need at least 4 samples");
  const auto& r = grid.points();
  std::vector<double> f(grid.size());
  double total = 0.0;
  if (grid.spacing() == GridSpacing::log_uniform) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] = radial_samples[i] * radial_samples[i] * r[i] * r[i] * r[i];
    }
    total = simpson(f, grid.step());
  } else {
    for (std::size_t i = 0; i < f.size(); ++i) {
      f[i] = radial_samples[i] * radial_samples[i] * r[i] * r[i];
    }
    bool equal = true;
    const double h = r[1] - r[0];
    for (std::size_t i = 2; i < r.size() && equal; ++i) {
      equal = std::abs((r[i] - r[i - 1]) - h) <= 1e-9 * h;
    }
    if (equal) {
      total = simpson(f, h);
    } else {
      for (std::size_t i = 1; i < f.size(); ++i) total += 0.5 * (f[i] + f[i - 1]) * (r[i] - r[i - 1]);
    }
  }
  // piece on (0, r0): integrand ~ r^k with k from the first two samples
  const double g0 = radial_samples[0] * radial_samples[0] * r[0] * r[0];
  const double g1 = radial_samples[1] * radial_samples[1] * r[1] * r[1];
  if (g0 > 0.0 && g1 > 0.0) {
    const double k = std::log(g1 / g0) / std::log(r[1] / r[0]);
    if (k > -1.0) total += g0 * r[0] / (k + 1.0);
  }
  return total;
}

double normalize(const RadialGrid& grid, std::span<const double> radial_samples) {
  double peak = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    peak = std::max(peak, std::abs(radial_samples[i] * grid[i]));
  }
  if (!(peak > 0.0)) throw InvalidParams("radial samples are identically zero");
  if (std::abs(radial_samples.back() * grid.back()) > 1e-12 * peak) {
    throw TailNotConverged("samples have not decayed below 1e-12 of the peak at r_max; "
                           "increase r_max");
  }
  return 1.0 / std::sqrt(radial_norm(grid, radial_samples));
}

int count_sign_changes(std::span<const double> samples) noexcept {
  int changes = 0;
  int last = 0;
  for (double v : samples) {
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RadialEquationCoefficients radial_equation_coefficients(const RadialWavefunction& wf,
                                                        const PhysicalParams& p) {
  const double hb2 = p.hbar * p.hbar;
  const double e2 = p.coupling_sq();
  const double ze2 = p.z_number * e2;
  const double l = wf.qn.l();
  RadialEquationCoefficients eq;
  eq.energy = (p.rest_mass + wf.system_mass) * wf.e_prime / hb2;
  eq.coulomb = 2.0 * wf.system_mass * ze2 / hb2;
  eq.inverse_square = ze2 * ze2 / (hb2 * p.c * p.c) - l * (l + 1.0);
  return eq;
}

double radial_ode_residual(const std::function<double(double)>& radial,
                           const RadialEquationCoefficients& eq, const RadialGrid& grid) {
  const auto& r = grid.points();
  const std::size_t n = r.size();
  if (n < 9) throw InvalidParams("residual grid needs at least 9 points");
  std::vector<double> R(n);
  for (std::size_t i = 0; i < n; ++i) R[i] = radial(r[i]);

  double worst = 0.0;
  double scale = 0.0;
  const bool log_grid = grid.spacing() == GridSpacing::log_uniform;
  const double dx = grid.step();
  for (std::size_t i = 3; i + 3 < n; ++i) {
    double lap_r;  // r * (R'' + 2R'/r)
    if (log_grid) {
      const double rx = (R[i + 1] - R[i - 1]) / (2.0 * dx);
      const double rxx = (R[i + 1] - 2.0 * R[i] + R[i - 1]) / (dx * dx);
      lap_r = (rxx + rx) / r[i];
    } else {
      const double hm = r[i] - r[i - 1];
      const double hp = r[i + 1] - r[i];
      const double d1 = (hm * hm * R[i + 1] - hp * hp * R[i - 1] + (hp * hp - hm * hm) * R[i]) /
                        (hm * hp * (hm + hp));
      const double d2 = 2.0 * (hm * R[i + 1] - (hm + hp) * R[i] + hp * R[i - 1]) /
                        (hm * hp * (hm + hp));
      lap_r = r[i] * d2 + 2.0 * d1;
    }
    const double t_energy = eq.energy * R[i] * r[i];
    const double t_coulomb = eq.coulomb * R[i];
    const double t_inverse = eq.inverse_square * R[i] / r[i];
    worst = std::max(worst, std::abs(lap_r + t_energy + t_coulomb + t_inverse));
    scale = std::max({scale, std::abs(lap_r), std::abs(t_energy), std::abs(t_coulomb),
                      std::abs(t_inverse)});
  }
  return scale > 0.0 ? worst / scale : 0.0;
}

double radial_ode_residual(const RadialWavefunction& wf, const PhysicalParams& p,
                           const RadialGrid& grid) {
  return radial_ode_residual([&wf](double r) { return wf(r); },
                             radial_equation_coefficients(wf, p), grid);
}

RadialGrid residual_reference_grid(const RadialWavefunction& wf, std::size_t points) {
  const double an = wf.length_scale();
  return RadialGrid::log_uniform(0.01 * an, (60.0 + 8.0 * wf.qn.n()) * an, points);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || m < -l || m > l) {
    throw InvalidQuantumNumbers("spherical harmonic needs l >= 0 and |m| <= l");
  }
  const unsigned am = static_cast<unsigned>(std::abs(m));
  double value = std::sph_legendre(static_cast<unsigned>(l), am, theta);
  if (m < 0 && am % 2 == 1) value = -value;
  return std::polar(1.0, m * phi) * value;
}

CartesianField stationary_state(const RadialWavefunction& wf, int m) {
  QuantumNumbers check(wf.qn.n(), wf.qn.l(), m);
  const int l = wf.qn.l();
  return [wf, l, m](double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    const double theta = std::acos(std::clamp(z / r, -1.0, 1.0));
    const double phi = std::atan2(y, x);
    return wf(r) * spherical_harmonic(l, m, theta, phi);
  };
}

}  // namespace kgbound
