#include "kgbound/coulomb.hpp"

#include <cmath>

#include "kgbound/errors.hpp"

namespace kgbound {

namespace {

struct LevelTerms {
  double x;       // (Z alpha)^2 / (n - sigma)^2
  double root;    // sqrt(1 + x)
};

LevelTerms level_terms(const PhysicalParams& p, int n, int l) {
  QuantumNumbers qn(n, l);
  validate_params(p, qn);
  const double sigma = sigma_closed(p, l).sigma_l;
  const double za = p.z_alpha();
  const double d = static_cast<double>(n) - sigma;
  const double x = (za * za) / (d * d);
  return {x, std::sqrt(1.0 + x)};
}

}  // namespace

DefectValue sigma_closed(const PhysicalParams& p, int l) {
  if (l < 0) throw InvalidQuantumNumbers("l must be >= 0");
  require_subcritical(p, l);
  const double za = p.z_alpha();
  const double h = l + 0.5;
  // (h - sqrt(h^2 - x)) rewritten as x / (h + sqrt(h^2 - x))
  const double root = std::sqrt((h - za) * (h + za));
  return {(za * za) / (h + root), l};
}

DefectValue sigma_series(const PhysicalParams& p, int l, int k_max) {
  if (l < 0) throw InvalidQuantumNumbers("l must be >= 0");
  if (k_max < 1) throw InvalidParams("k_max must be >= 1");
  require_subcritical(p, l);
  const double za2 = p.z_alpha() * p.z_alpha();
  const double two_l1 = 2.0 * l + 1.0;
  // term_k = 2^{k-1} (2k-3)!! / (k! (2l+1)^{2k-1}) x^k, built by ratios:
  // term_{k+1}/term_k = 2 (2k-1) / ((k+1) (2l+1)^2) x
  double term = za2 / two_l1;
  double sum = term;
  for (int k = 1; k < k_max; ++k) {
    term *= 2.0 * (2.0 * k - 1.0) / ((k + 1.0) * two_l1 * two_l1) * za2;
    sum += term;
  }
  return {sum, l};
}

BoundState energy_level(const PhysicalParams& p, int n, int l, EnergyBranch branch) {
  const LevelTerms t = level_terms(p, n, l);
  const double mc2 = p.rest_energy();
  // E' = mc2 (1/sqrt(1+x) - 1) = -mc2 x / (sqrt(1+x) (1 + sqrt(1+x)))
  double e_prime = -mc2 * t.x / (t.root * (1.0 + t.root));
  if (branch == EnergyBranch::negative) e_prime = -mc2 / t.root - mc2;
  BoundState b = BoundState::from_energy(QuantumNumbers(n, l), e_prime, p);
  return b;
}

double energy_expansion_prime(const PhysicalParams& p, int n, int l) {
  QuantumNumbers qn(n, l);
  const double x0 = p.z_alpha() * p.z_alpha();
  const double dn = n;
  const double n2 = dn * dn;
  return -p.rest_energy() *
         (x0 / (2.0 * n2) + x0 * x0 / (2.0 * n2 * n2) * (dn / (l + 0.5) - 0.75));
}

double energy_expansion(const PhysicalParams& p, int n, int l) {
  return p.rest_energy() + energy_expansion_prime(p, n, l);
}

double system_mass(const PhysicalParams& p, int n, int l) {
  return energy_level(p, n, l).system_mass;
}

}  // namespace kgbound
