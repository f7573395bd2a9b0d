#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kgbound/core_model.hpp"
#include "kgbound/tridiagonal.hpp"

namespace kgbound {

enum class SolveMode { schrodinger, kg_vector, kg_scalar_vector, kg_equal };

std::string to_string(SolveMode mode);
/// Accepts schrodinger, kg-vector, kg-scalar-vector, kg-equal (and '_' variants).
SolveMode parse_mode(const std::string& text);

enum class Stencil {
  /// Flux form for u = r^s e^{a1 r} f on a cell-centred grid. Default.
  frobenius,
  /// Plain three-point Laplacian on r_i = i h.
  standard,
};

/// E' u = -k u'' + V_eff(r) u with
/// V_eff = k l(l+1)/r^2 + cU U + cUU U^2 + cS S + cSS S^2.
struct RadialEquation {
  SolveMode mode = SolveMode::kg_vector;
  int l = 0;
  double kinetic = 0.5;   // k
  double c_u = 0.0;
  double c_uu = 0.0;
  double c_s = 0.0;
  double c_ss = 0.0;
  PotentialTerm u_term = NoTerm{};
  PotentialTerm s_term = NoTerm{};
  double coupling_sq = 0.0;  // e_s^2
  double mass_parameter = 0.0;

  // Small-r structure: V_eff = k gamma / r^2 - w1 / r + O(1).
  double gamma = 0.0;
  double w1 = 0.0;
  double s = 1.0;   // indicial exponent
  double a1 = 0.0;  // u ~ r^s (1 + a1 r + ...)

  double effective_potential(double r) const noexcept;
  /// V_eff - k (r^s e^{a1 r})'' / (r^s e^{a1 r}); finite at the origin.
  double regular_remainder(double r) const noexcept;
};

/// Builds the coefficients for the given mode at frozen system mass m_sys.
/// Throws UnsupportedCombination for scalar parts in modes that ignore them
/// or unequal parts in kg_equal, SupercriticalCoupling if gamma < -1/4.
RadialEquation effective_radial_equation(SolveMode mode, const PotentialSpec& potential,
                                         const PhysicalParams& p, double m_sys, int l);

/// Symmetric tridiagonal operator on u = rR with the quadratic-form pieces
/// (k/h^2) sum_i (a_i u_{i+1} - b_i u_i)^2 + sum_i q_i u_i^2 kept for the
/// Rayleigh quotient.
struct DiscretizedOperator {
  SymTridiagonal matrix;
  double mass_parameter = 0.0;
  Stencil stencil = Stencil::frobenius;
  std::vector<double> r;
  double h = 0.0;
  double kinetic_scale = 0.0;        // k / h^2
  std::vector<double> face_next;     // a_i, faces 0..N
  std::vector<double> face_self;     // b_i, faces 0..N
  std::vector<double> potential;     // q_i

  const std::vector<double>& diag() const noexcept { return matrix.diag; }
  const std::vector<double>& offdiag() const noexcept { return matrix.off; }
  /// Quadratic form over sum u_i^2, evaluated in difference form.
  double rayleigh_quotient(const std::vector<double>& u) const;
};

/// Grid matching a stencil: cell-centred for frobenius, interior uniform for standard.
RadialGrid solver_grid(Stencil stencil, double r_max, std::size_t points);

/// Needs at least 200 points laid out as solver_grid produces.
DiscretizedOperator assemble(const RadialEquation& eq, const RadialGrid& grid,
                             Stencil stencil = Stencil::frobenius);

struct Eigenpair {
  double e_prime = 0.0;
  std::vector<double> u;  // sum u^2 h = 1, positive near the origin
  int node_count = 0;
};

/// Eigenpair with exactly node_target sign changes and E' < 0, else StateNotFound.
Eigenpair inner_eigensolve(const DiscretizedOperator& op, int node_target);

struct SolveRequest {
  SolveMode mode = SolveMode::kg_vector;
  PotentialSpec potential;
  int n = 1;
  int l = 0;
  std::size_t grid_points = 8000;
  /// 0 selects default_r_max.
  double r_max = 0.0;
  Stencil stencil = Stencil::frobenius;
  double sc_tolerance = 1e-12;
  int max_sc_iters = 200;
  /// Relative |u| allowed over the outer 1% of the grid.
  double tail_tolerance = 1e-8;
};

/// n (40 + 4n) (2k / w1), stretched by 1 / (1 - x) (at most 10x) for Hulthen
/// screening x = lambda n^2 k / w1.
double default_r_max(const SolveRequest& req, const PhysicalParams& p);

/// Fixed-point iteration on the system mass; a single solve in Schrodinger mode.
BoundState solve_self_consistent(const SolveRequest& req, const PhysicalParams& p);

struct RichardsonResult {
  BoundState coarse;
  BoundState fine;
  double e_prime = 0.0;  // (4 E_fine - E_coarse) / 3
};

/// Solves on N and 2N points over the same r_max and extrapolates E'.
RichardsonResult solve_richardson(const SolveRequest& req, const PhysicalParams& p,
                                  std::size_t coarse_points = 4000);

struct ConvergenceRow {
  std::size_t points = 0;
  double e_prime = 0.0;
  /// Extrapolated from this row and the previous one (NaN on the first row).
  double richardson = 0.0;
  /// log2 of successive difference ratios (NaN until three rows exist).
  double observed_order = 0.0;
};

/// Needs at least three grid sizes, each double the previous.
std::vector<ConvergenceRow> convergence_study(const SolveRequest& req, const PhysicalParams& p,
                                              const std::vector<std::size_t>& grid_sizes);

}  // namespace kgbound
