#include "kgbound/current.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "kgbound/errors.hpp"
#include "kgbound/parallel.hpp"
#include "kgbound/quadrature.hpp"

namespace kgbound {

SphericalProductGrid SphericalProductGrid::make(double r_min, double r_max, std::size_t nr,
                                                std::size_t ntheta, std::size_t nphi) {
  if (nr < 2 || ntheta < 1 || nphi < 1) throw InvalidParams("product grid too small");
  SphericalProductGrid g;
  g.r = RadialGrid::log_uniform(r_min, r_max, nr).points();
  const GaussRule rule = gauss_legendre(static_cast<int>(ntheta));
  g.theta.resize(ntheta);
  for (std::size_t i = 0; i < ntheta; ++i) g.theta[i] = std::acos(-rule.nodes[i]);
  g.phi.resize(nphi);
  for (std::size_t k = 0; k < nphi; ++k) {
    g.phi[k] = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(nphi);
  }
  return g;
}

std::array<double, 3> SphericalProductGrid::spherical(std::size_t index) const noexcept {
  const std::size_t np = phi.size();
  const std::size_t nt = theta.size();
  const std::size_t k = index % np;
  const std::size_t j = (index / np) % nt;
  const std::size_t i = index / (np * nt);
  return {r[i], theta[j], phi[k]};
}

std::array<double, 3> SphericalProductGrid::cartesian(std::size_t index) const noexcept {
  const auto [rr, t, f] = spherical(index);
  const double st = std::sin(t);
  return {rr * st * std::cos(f), rr * st * std::sin(f), rr * std::cos(t)};
}

CurrentField probability_current(const CartesianField& psi, const SphericalProductGrid& grid,
                                 const PhysicalParams& p, double m_sys, double h) {
  if (!(h > 0.0)) throw InvalidParams("finite-difference step must be positive");
  const double pref = 2.0 * p.hbar / (p.rest_mass + m_sys);
  CurrentField out;
  out.step = h;
  const std::size_t total = grid.size();
  out.j.resize(total);
  out.divergence.resize(total);
  out.density.resize(total);

  parallel_for(total, [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto x = grid.cartesian(idx);
      const std::complex<double> c = psi(x[0], x[1], x[2]);
      std::array<double, 3> j{};
      double div = 0.0;
      for (int d = 0; d < 3; ++d) {
        auto at = [&](double offset) {
          auto y = x;
          y[static_cast<std::size_t>(d)] += offset;
          return psi(y[0], y[1], y[2]);
        };
        const auto p1 = at(h);
        const auto m1 = at(-h);
        const auto p2 = at(2.0 * h);
        const auto m2 = at(-2.0 * h);
        // J_d = pref Im(psi* d_d psi)
        j[static_cast<std::size_t>(d)] = pref * std::imag(std::conj(c) * (p1 - m1)) / (2.0 * h);
        const double j_plus = pref * std::imag(std::conj(p1) * (p2 - c)) / (2.0 * h);
        const double j_minus = pref * std::imag(std::conj(m1) * (c - m2)) / (2.0 * h);
        div += (j_plus - j_minus) / (2.0 * h);
      }
      out.j[idx] = j;
      out.divergence[idx] = div;
      out.density[idx] = std::norm(c);
    }
  });
  return out;
}

double azimuthal_component(const SphericalProductGrid& grid, std::size_t index,
                           const std::array<double, 3>& v) noexcept {
  const double f = grid.spherical(index)[2];
  return -std::sin(f) * v[0] + std::cos(f) * v[1];
}

double analytic_azimuthal_current(double density, double r, double theta, int m,
                                  const PhysicalParams& p, double m_sys) noexcept {
  return 2.0 * p.hbar * m * density / ((p.rest_mass + m_sys) * r * std::sin(theta));
}

ContinuityReport continuity_check(const CurrentField& field) {
  ContinuityReport rep;
  rep.step = field.step;
  for (std::size_t i = 0; i < field.j.size(); ++i) {
    const auto& v = field.j[i];
    rep.max_current = std::max(rep.max_current, std::hypot(v[0], v[1], v[2]));
    rep.max_divergence = std::max(rep.max_divergence, std::abs(field.divergence[i]));
  }
  return rep;
}

}  // namespace kgbound
