#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace kgbound {

inline constexpr double kFineStructure = 7.2973525693e-3;

enum class UnitSystem { natural, custom };

/// Physical constants and couplings shared by every computation.
///
/// In natural units hbar = c = rest_mass = 1 and energies come out in units of
/// the rest energy.  `custom` lifts that restriction (used, for instance, to
/// build the Schrodinger operator with a mapped mass).
struct PhysicalParams {
  double rest_mass = 1.0;
  double z_number = 1.0;
  double alpha = kFineStructure;
  double c = 1.0;
  double hbar = 1.0;
  UnitSystem units = UnitSystem::natural;

  static PhysicalParams natural(double z_number, double alpha = kFineStructure);

  /// Throws InvalidParams unless every field is strictly positive and the
  /// natural-unit constraint holds.
  void check() const;

  double z_alpha() const noexcept { return z_number * alpha; }
  /// e_s^2 = alpha * hbar * c.
  double coupling_sq() const noexcept { return alpha * hbar * c; }
  double rest_energy() const noexcept { return rest_mass * c * c; }
  /// hbar^2 / (mass e_s^2); pass the system mass for the state-dependent radius.
  double bohr_radius(double mass) const noexcept { return hbar / (mass * c * alpha); }
  double bohr_radius() const noexcept { return bohr_radius(rest_mass); }
};

/// Principal, angular and magnetic quantum numbers; always valid once built.
class QuantumNumbers {
 public:
  QuantumNumbers(int n, int l, int m = 0);

  int n() const noexcept { return n_; }
  int l() const noexcept { return l_; }
  int m() const noexcept { return m_; }
  int radial_nodes() const noexcept { return n_ - l_ - 1; }

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;

 private:
  int n_;
  int l_;
  int m_;
};

/// -Z e_s^2 / r.
struct CoulombTerm {
  double z = 1.0;
};

/// -Z e_s^2 lambda e^{-lambda r} / (1 - e^{-lambda r}); lambda in inverse length.
struct HulthenTerm {
  double z = 1.0;
  double lambda = 1.0;
};

struct NoTerm {};

using PotentialTerm = std::variant<NoTerm, CoulombTerm, HulthenTerm>;

/// Declarative vector (U) and scalar (S) potential parts.
struct PotentialSpec {
  PotentialTerm vector_part = NoTerm{};
  PotentialTerm scalar_part = NoTerm{};

  static PotentialSpec coulomb(double z);
  /// Hulthen with screening given in units of the Bohr radius of `p`.
  static PotentialSpec hulthen(double z, double lambda_per_bohr, const PhysicalParams& p);
  static PotentialSpec free() { return {}; }

  bool has_vector() const noexcept { return !std::holds_alternative<NoTerm>(vector_part); }
  bool has_scalar() const noexcept { return !std::holds_alternative<NoTerm>(scalar_part); }
  bool scalar_equals_vector() const noexcept;

  /// Throws InvalidParams for non-positive screening.
  void check() const;
  std::string describe() const;
};

/// Value of the term at radius r; `coupling_sq` is e_s^2.
double evaluate_term(const PotentialTerm& term, double r, double coupling_sq) noexcept;

/// Coefficients of the small-r expansion term(r) = -A/r + B + O(r).
struct LaurentCoefficients {
  double inverse_r = 0.0;  // A
  double constant = 0.0;   // B
};
LaurentCoefficients laurent_coefficients(const PotentialTerm& term, double coupling_sq) noexcept;

enum class GridSpacing { uniform, log_uniform, cell_centered };

/// Strictly increasing positive sample radii.
class RadialGrid {
 public:
  RadialGrid(std::vector<double> points, GridSpacing spacing);

  static RadialGrid uniform(double r_max, std::size_t n);
  /// Nodes (i - 1/2) h for i = 1..n with h = r_max / n.
  static RadialGrid cell_centered(double r_max, std::size_t n);
  static RadialGrid log_uniform(double r_min, double r_max, std::size_t n);

  const std::vector<double>& points() const noexcept { return points_; }
  GridSpacing spacing() const noexcept { return spacing_; }
  std::size_t size() const noexcept { return points_.size(); }
  double operator[](std::size_t i) const noexcept { return points_[i]; }
  double front() const noexcept { return points_.front(); }
  double back() const noexcept { return points_.back(); }
  /// Constant step for uniform/cell-centred grids, log step for log grids.
  double step() const noexcept { return step_; }

 private:
  std::vector<double> points_;
  GridSpacing spacing_;
  double step_ = 0.0;
};

/// Converged eigenvalue record.
struct BoundState {
  QuantumNumbers qn{1, 0, 0};
  double e_prime = 0.0;
  double e_total = 0.0;
  double system_mass = 0.0;
  int node_count = 0;
  std::vector<double> r;
  std::vector<double> u;
  int iterations = 0;
  double residual = 0.0;
  /// |m_{k+1} - m_k| / m0 per self-consistency iteration.
  std::vector<double> residual_history;

  /// Fills e_total and system_mass from e_prime.
  static BoundState from_energy(QuantumNumbers qn, double e_prime, const PhysicalParams& p);
};

/// Returns the pair unchanged, or throws SupercriticalCoupling when Z alpha >= l + 1/2.
std::pair<PhysicalParams, QuantumNumbers> validate_params(const PhysicalParams& p,
                                                          const QuantumNumbers& qn);
/// Angular-momentum-only form of the reality condition.
void require_subcritical(const PhysicalParams& p, int l);

/// |E'| = (m0 - m) c^2; throws NotBound unless e_prime < 0.
double binding_energy(const BoundState& b, const PhysicalParams& p);

}  // namespace kgbound
