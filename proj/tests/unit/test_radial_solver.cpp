#include <doctest.h>

#include <cmath>

#include "kgbound/coulomb.hpp"
#include "kgbound/errors.hpp"
#include "kgbound/radial_solver.hpp"

using namespace kgbound;

namespace {

PhysicalParams with_za(double za) { return PhysicalParams::natural(1.0, za); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

SolveRequest coulomb_request(SolveMode mode, const PhysicalParams& p, int n, int l) {
  SolveRequest r;
  r.mode = mode;
  r.potential = PotentialSpec::coulomb(p.z_number);
  r.n = n;
  r.l = l;
  return r;
}

}  // namespace

TEST_CASE("mode names round-trip") {
  for (SolveMode m : {SolveMode::schrodinger, SolveMode::kg_vector, SolveMode::kg_scalar_vector,
                      SolveMode::kg_equal}) {
    CHECK(parse_mode(to_string(m)) == m);
  }
  CHECK(parse_mode("kg_equal") == SolveMode::kg_equal);
  CHECK_THROWS_AS(parse_mode("dirac"), InvalidParams);
}

TEST_CASE("Schrodinger hydrogen levels") {
  const PhysicalParams p = PhysicalParams::natural(1.0);
  for (int n : {1, 2}) {
    const SolveRequest req = coulomb_request(SolveMode::schrodinger, p, n, 0);
    const RichardsonResult r = solve_richardson(req, p);
    const double exact = -p.alpha * p.alpha / (2.0 * n * n);
    CHECK(rel(r.e_prime, exact) < 1e-8);
    CHECK(r.fine.node_count == n - 1);
    CHECK(r.fine.iterations == 1);
  }
}

TEST_CASE("eigenvector is normalized with a positive start") {
  const PhysicalParams p = with_za(0.1);
  const BoundState b = solve_self_consistent(coulomb_request(SolveMode::kg_vector, p, 3, 1), p);
  const double h = b.r[1] - b.r[0];
  double norm = 0.0;
  for (double v : b.u) norm += v * v * h;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(b.u[0] > 0.0);
  CHECK(b.node_count == 1);
  CHECK(b.e_total == doctest::Approx(1.0 + b.e_prime));
  CHECK(b.system_mass == doctest::Approx(1.0 + b.e_prime));
}

TEST_CASE("KG Coulomb matches the closed form") {
  for (double za : {0.1, 0.3}) {
    const PhysicalParams p = with_za(za);
    for (int n = 1; n <= 2; ++n) {
      for (int l = 0; l < n; ++l) {
        const RichardsonResult r = solve_richardson(coulomb_request(SolveMode::kg_vector, p, n, l), p);
        CHECK(rel(r.e_prime, energy_level(p, n, l).e_prime) < 1e-6);
      }
    }
  }
}

TEST_CASE("free operator has no bound state") {
  const PhysicalParams p = with_za(0.1);
  SolveRequest req;
  req.mode = SolveMode::kg_vector;
  req.potential = PotentialSpec::free();
  req.r_max = 100.0;
  req.grid_points = 400;
  CHECK_THROWS_AS(solve_self_consistent(req, p), StateNotFound);
}

TEST_CASE("inner eigensolve refuses an unreachable node count") {
  const PhysicalParams p = with_za(0.1);
  const RadialEquation eq = effective_radial_equation(SolveMode::schrodinger, PotentialSpec::coulomb(p.z_number), p, 1.0, 0);
  // a box of 5 Bohr radii holds only the lowest levels
  const DiscretizedOperator op = assemble(eq, solver_grid(Stencil::frobenius, 5.0 * p.bohr_radius() / p.z_number, 400));
  CHECK_NOTHROW(inner_eigensolve(op, 0));
  CHECK_THROWS_AS(inner_eigensolve(op, 6), StateNotFound);
  CHECK_THROWS_AS(inner_eigensolve(op, -1), InvalidParams);
}

TEST_CASE("standard stencil converges at second order") {
  const PhysicalParams p = with_za(0.1);
  SolveRequest req = coulomb_request(SolveMode::schrodinger, p, 1, 0);
  req.stencil = Stencil::standard;
  const auto rows = convergence_study(req, p, {1000, 2000, 4000});
  CHECK(std::isnan(rows[0].richardson));
  CHECK(std::isnan(rows[1].observed_order));
  CHECK(rows[2].observed_order >= 1.8);
  CHECK(rows[2].observed_order <= 2.2);
  const double exact = -0.005;
  CHECK(rel(rows[2].richardson, exact) < rel(rows[2].e_prime, exact));
}

TEST_CASE("error ratio near 4 per halving for l = 1") {
  const PhysicalParams p = with_za(0.1);
  SolveRequest req = coulomb_request(SolveMode::kg_vector, p, 2, 1);
  req.stencil = Stencil::standard;
  req.r_max = default_r_max(req, p);
  const double exact = energy_level(p, 2, 1).e_prime;
  req.grid_points = 1000;
  const double e1 = std::abs(solve_self_consistent(req, p).e_prime - exact);
  req.grid_points = 2000;
  const double e2 = std::abs(solve_self_consistent(req, p).e_prime - exact);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("flux stencil is exact for nodeless Coulomb states") {
  // u = r^s e^{a1 r} is the exact n = l + 1 eigenfunction
  for (double za : {0.05, 0.3}) {
    const PhysicalParams p = with_za(za);
    for (int n = 1; n <= 3; ++n) {
      SolveRequest req = coulomb_request(SolveMode::kg_vector, p, n, n - 1);
      req.grid_points = 500;
      CHECK(rel(solve_self_consistent(req, p).e_prime, energy_level(p, n, n - 1).e_prime) < 1e-11);
    }
  }
}

TEST_CASE("equal scalar-vector operator is the mapped Schrodinger operator") {
  const PhysicalParams p = PhysicalParams::natural(1.0);
  const double lambda = 0.2 / p.bohr_radius();
  for (double m : {1.0, 0.9999, 0.95}) {
    for (bool hulthen : {false, true}) {
      PotentialSpec kg;
      PotentialSpec schr;
      if (hulthen) {
        kg.vector_part = HulthenTerm{1.0, lambda};
        schr.vector_part = HulthenTerm{2.0, lambda};
      } else {
        kg.vector_part = CoulombTerm{1.0};
        schr.vector_part = CoulombTerm{2.0};
      }
      kg.scalar_part = kg.vector_part;
      PhysicalParams mapped = p;
      mapped.units = UnitSystem::custom;
      mapped.rest_mass = 0.5 * (p.rest_mass + m);
      for (Stencil st : {Stencil::frobenius, Stencil::standard}) {
        const RadialGrid g = solver_grid(st, 3000.0, 500);
        const DiscretizedOperator a = assemble(effective_radial_equation(SolveMode::kg_equal, kg, p, m, 0), g, st);
        const DiscretizedOperator b =
            assemble(effective_radial_equation(SolveMode::schrodinger, schr, mapped, mapped.rest_mass, 0), g, st);
        CHECK(a.diag() == b.diag());
        CHECK(a.offdiag() == b.offdiag());
      }
    }
  }
}

TEST_CASE("kg-scalar-vector reduces to the other modes") {
  const PhysicalParams p = with_za(0.1);
  SolveRequest sv = coulomb_request(SolveMode::kg_scalar_vector, p, 1, 0);
  sv.grid_points = 2000;
  SolveRequest v = coulomb_request(SolveMode::kg_vector, p, 1, 0);
  v.grid_points = 2000;
  v.r_max = sv.r_max = default_r_max(v, p);
  CHECK(solve_self_consistent(sv, p).e_prime == doctest::Approx(solve_self_consistent(v, p).e_prime).epsilon(1e-13));

  sv.potential.scalar_part = sv.potential.vector_part;
  SolveRequest eq = sv;
  eq.mode = SolveMode::kg_equal;
  CHECK(solve_self_consistent(sv, p).e_prime == doctest::Approx(solve_self_consistent(eq, p).e_prime).epsilon(1e-12));
}

TEST_CASE("unsupported potential combinations") {
  const PhysicalParams p = with_za(0.1);
  PotentialSpec s = PotentialSpec::coulomb(p.z_number);
  s.scalar_part = CoulombTerm{p.z_number};
  CHECK_THROWS_AS(effective_radial_equation(SolveMode::schrodinger, s, p, 1.0, 0), UnsupportedCombination);
  CHECK_THROWS_AS(effective_radial_equation(SolveMode::kg_vector, s, p, 1.0, 0), UnsupportedCombination);
  s.scalar_part = CoulombTerm{2.0 * p.z_number};
  CHECK_THROWS_AS(effective_radial_equation(SolveMode::kg_equal, s, p, 1.0, 0), UnsupportedCombination);
  CHECK_NOTHROW(effective_radial_equation(SolveMode::kg_scalar_vector, s, p, 1.0, 0));
}

TEST_CASE("supercritical coupling surfaces from the indicial equation") {
  const PhysicalParams p = with_za(0.6);
  CHECK_THROWS_AS(effective_radial_equation(SolveMode::kg_vector, PotentialSpec::coulomb(p.z_number), p, 1.0, 0),
                  SupercriticalCoupling);
  CHECK_NOTHROW(effective_radial_equation(SolveMode::kg_vector, PotentialSpec::coulomb(p.z_number), p, 1.0, 1));
}

TEST_CASE("indicial exponent matches the quantum defect") {
  for (double za : {0.05, 0.3}) {
    const PhysicalParams p = with_za(za);
    for (int l = 0; l <= 2; ++l) {
      const RadialEquation eq =
          effective_radial_equation(SolveMode::kg_vector, PotentialSpec::coulomb(p.z_number), p, 1.0, l);
      CHECK(eq.s == doctest::Approx(l + 1.0 - sigma_closed(p, l).sigma_l).epsilon(1e-13));
    }
  }
}

TEST_CASE("regular remainder equals the effective potential minus the singular pieces") {
  const PhysicalParams p = PhysicalParams::natural(1.0);
  PotentialSpec h = PotentialSpec::hulthen(1.0, 0.3, p);
  const RadialEquation eq = effective_radial_equation(SolveMode::kg_vector, h, p, 0.99999, 1);
  for (double r : {1e-3, 0.5, 40.0, 300.0}) {
    // k (r^s e^{a1 r})''/(r^s e^{a1 r}) = k (s(s-1)/r^2 + 2 s a1 / r + a1^2)
    const double frob = eq.kinetic * (eq.s * (eq.s - 1.0) / (r * r) + 2.0 * eq.s * eq.a1 / r + eq.a1 * eq.a1);
    const double expected = eq.effective_potential(r) - frob;
    CHECK(eq.regular_remainder(r) == doctest::Approx(expected).epsilon(1e-6).scale(std::abs(eq.effective_potential(r))));
  }
}

TEST_CASE("over-tight tolerance converges or reports NoConvergence") {
  const PhysicalParams p = with_za(0.2);
  SolveRequest req = coulomb_request(SolveMode::kg_vector, p, 2, 0);
  req.sc_tolerance = 1e-15;
  req.max_sc_iters = 30;
  req.grid_points = 2000;
  const double exact = energy_level(p, 2, 0).e_prime;
  try {
    const BoundState b = solve_self_consistent(req, p);
    CHECK(b.residual < 1e-15);
    CHECK(rel(b.e_prime, exact) < 1e-3);
  } catch (const NoConvergence& e) {
    CHECK(std::abs(e.last_mass() - e.previous_mass()) < 1e-12);
  }

  req.max_sc_iters = 1;
  req.sc_tolerance = 1e-12;
  try {
    solve_self_consistent(req, p);
    FAIL("a single iteration cannot converge from m = m0");
  } catch (const NoConvergence& e) {
    CHECK(e.last_mass() < e.previous_mass());
    CHECK(e.previous_mass() == 1.0);
  }
}

TEST_CASE("tail check rejects a truncated box") {
  const PhysicalParams p = with_za(0.1);
  SolveRequest req = coulomb_request(SolveMode::kg_vector, p, 1, 0);
  req.r_max = 8.0 * p.bohr_radius() / p.z_number;
  req.grid_points = 400;
  CHECK_THROWS_AS(solve_self_consistent(req, p), TailNotConverged);
}

TEST_CASE("Schrodinger limit of the KG solve") {
  const PhysicalParams p = with_za(1e-3);
  for (int n = 1; n <= 4; ++n) {
    const RichardsonResult r = solve_richardson(coulomb_request(SolveMode::kg_vector, p, n, 0), p);
    const double bohr = -1e-6 / (2.0 * n * n);
    CHECK(rel(r.e_prime, bohr) < 5e-6);
  }
}

TEST_CASE("Hulthen equal-potential ground state") {
  const PhysicalParams p = PhysicalParams::natural(1.0);
  PotentialSpec pot = PotentialSpec::hulthen(1.0, 0.2, p);
  pot.scalar_part = pot.vector_part;
  SolveRequest req;
  req.mode = SolveMode::kg_equal;
  req.potential = pot;
  const BoundState b = solve_self_consistent(req, p);
  CHECK(b.iterations <= 20);
  // Frozen from the closed-form fixed point.
  const double lambda = std::get<HulthenTerm>(pot.vector_part).lambda;
  double m = 1.0;
  double e = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double M = 0.5 * (1.0 + m);
    const double bb = 4.0 * M * p.alpha / lambda;
    e = -(lambda * lambda / (8.0 * M)) * (bb - 1.0) * (bb - 1.0);
    m = 1.0 + e;
  }
  CHECK(rel(b.e_prime, e) < 1e-8);
}

TEST_CASE("Hulthen excited states after extrapolation") {
  const PhysicalParams p = PhysicalParams::natural(1.0);
  PotentialSpec pot = PotentialSpec::hulthen(1.0, 0.1, p);
  pot.scalar_part = pot.vector_part;
  const double lambda = std::get<HulthenTerm>(pot.vector_part).lambda;
  for (int n = 2; n <= 3; ++n) {
    SolveRequest req;
    req.mode = SolveMode::kg_equal;
    req.potential = pot;
    req.n = n;
    const RichardsonResult r = solve_richardson(req, p);
    double m = 1.0;
    double e = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double M = 0.5 * (1.0 + m);
      const double bb = 4.0 * M * p.alpha / lambda;
      e = -(lambda * lambda / (8.0 * M)) * (bb / n - n) * (bb / n - n);
      m = 1.0 + e;
    }
    CHECK(rel(r.e_prime, e) < 1e-6);
  }
}

TEST_CASE("assemble validates its grid") {
  const PhysicalParams p = with_za(0.1);
  const RadialEquation eq = effective_radial_equation(SolveMode::kg_vector, PotentialSpec::coulomb(p.z_number), p, 1.0, 0);
  CHECK_THROWS_AS(assemble(eq, solver_grid(Stencil::frobenius, 100.0, 100)), InvalidParams);
  CHECK_THROWS_AS(assemble(eq, solver_grid(Stencil::standard, 100.0, 400), Stencil::frobenius), InvalidParams);
  CHECK_THROWS_AS(assemble(eq, solver_grid(Stencil::frobenius, 100.0, 400), Stencil::standard), InvalidParams);
}
