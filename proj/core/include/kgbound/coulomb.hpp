#pragma once

#include "kgbound/core_model.hpp"

namespace kgbound {

struct DefectValue {
  double sigma_l = 0.0;
  int l = 0;
};

/// sigma_l = l + 1/2 - sqrt((l+1/2)^2 - (Z alpha)^2), evaluated without cancellation.
DefectValue sigma_closed(const PhysicalParams& p, int l);

/// Partial sum of the power series of sigma_l through k = k_max.
DefectValue sigma_series(const PhysicalParams& p, int l, int k_max);

enum class EnergyBranch { positive, negative };

/// Closed-form Coulomb level; radial samples are left empty.
BoundState energy_level(const PhysicalParams& p, int n, int l,
                        EnergyBranch branch = EnergyBranch::positive);

/// Truncated expansion through (Z alpha)^4, in units of energy.
double energy_expansion(const PhysicalParams& p, int n, int l);
/// Same expansion without the rest energy, free of cancellation at small Z alpha.
double energy_expansion_prime(const PhysicalParams& p, int n, int l);

/// m = m0 / sqrt(1 + (Z alpha)^2 / (n - sigma_l)^2).
double system_mass(const PhysicalParams& p, int n, int l);

}  // namespace kgbound
