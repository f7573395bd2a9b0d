#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "kgbound/core_model.hpp"
#include "kgbound/wavefunction.hpp"

namespace kgbound {

/// r (log), theta (Gauss-Legendre in cos theta), phi (uniform) product grid.
struct SphericalProductGrid {
  std::vector<double> r;
  std::vector<double> theta;
  std::vector<double> phi;

  static SphericalProductGrid make(double r_min, double r_max, std::size_t nr = 200,
                                   std::size_t ntheta = 64, std::size_t nphi = 64);
  std::size_t size() const noexcept { return r.size() * theta.size() * phi.size(); }
  /// Flat index order: r slowest, phi fastest.
  std::array<double, 3> spherical(std::size_t index) const noexcept;
  std::array<double, 3> cartesian(std::size_t index) const noexcept;
};

/// J = i hbar / (m0 + m) (psi grad psi* - psi* grad psi) with its divergence,
/// both from Cartesian central differences of step h.
struct CurrentField {
  double step = 0.0;
  std::vector<std::array<double, 3>> j;
  std::vector<double> divergence;
  std::vector<double> density;
};

CurrentField probability_current(const CartesianField& psi, const SphericalProductGrid& grid,
                                 const PhysicalParams& p, double m_sys, double h);

/// Unit vector phi-hat component of a Cartesian vector at a grid point.
double azimuthal_component(const SphericalProductGrid& grid, std::size_t index,
                           const std::array<double, 3>& v) noexcept;

/// J_phi = 2 hbar m |psi|^2 / ((m0 + m_sys) r sin theta) for psi ~ e^{i m phi}.
double analytic_azimuthal_current(double density, double r, double theta, int m,
                                  const PhysicalParams& p, double m_sys) noexcept;

struct ContinuityReport {
  double max_divergence = 0.0;
  double max_current = 0.0;
  double step = 0.0;
  /// max |div J| / (max |J| / h).
  double relative() const noexcept {
    return max_current > 0.0 ? max_divergence * step / max_current : 0.0;
  }
};

ContinuityReport continuity_check(const CurrentField& field);

}  // namespace kgbound
