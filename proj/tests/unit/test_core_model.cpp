#include <doctest.h>

#include <random>

#include "kgbound/core_model.hpp"
#include "kgbound/errors.hpp"

using namespace kgbound;

TEST_CASE("natural params carry the documented defaults") {
  const PhysicalParams p;
  CHECK(p.rest_mass == 1.0);
  CHECK(p.hbar == 1.0);
  CHECK(p.c == 1.0);
  CHECK(p.alpha == 7.2973525693e-3);
  CHECK_NOTHROW(p.check());
}

TEST_CASE("params reject non-positive fields and broken natural units") {
  PhysicalParams p;
  p.z_number = 0.0;
  CHECK_THROWS_AS(p.check(), InvalidParams);
  p = PhysicalParams{};
  p.alpha = -1.0;
  CHECK_THROWS_AS(p.check(), InvalidParams);
  p = PhysicalParams{};
  p.hbar = 2.0;
  CHECK_THROWS_AS(p.check(), InvalidParams);
  p.units = UnitSystem::custom;
  CHECK_NOTHROW(p.check());
}

TEST_CASE("validate_params enforces Z alpha < l + 1/2") {
  const PhysicalParams hydrogen = PhysicalParams::natural(1.0);
  CHECK_NOTHROW(validate_params(hydrogen, QuantumNumbers(1, 0)));

  const PhysicalParams heavy = PhysicalParams::natural(70.0);
  CHECK_THROWS_AS(validate_params(heavy, QuantumNumbers(1, 0)), SupercriticalCoupling);
  CHECK_NOTHROW(validate_params(heavy, QuantumNumbers(2, 1)));

  try {
    validate_params(heavy, QuantumNumbers(1, 0));
  } catch (const SupercriticalCoupling& e) {
    CHECK(e.l() == 0);
    CHECK(e.z_alpha() == doctest::Approx(70.0 * kFineStructure));
  }
}

TEST_CASE("validate_params is monotone in Z") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> zdist(0.1, 300.0);
  for (int trial = 0; trial < 2000; ++trial) {
    const double z = zdist(rng);
    const int l = static_cast<int>(rng() % 4);
    const PhysicalParams p = PhysicalParams::natural(z);
    bool valid = true;
    try {
      require_subcritical(p, l);
    } catch (const SupercriticalCoupling&) {
      valid = false;
    }
    if (valid) {
      const PhysicalParams smaller = PhysicalParams::natural(z * 0.5);
      CHECK_NOTHROW(require_subcritical(smaller, l));
    }
  }
}

TEST_CASE("quantum numbers reject every invalid triple") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dist(-6, 8);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = dist(rng);
    const int l = dist(rng);
    const int m = dist(rng);
    const bool valid = n >= 1 && l >= 0 && l <= n - 1 && m >= -l && m <= l;
    if (valid) {
      const QuantumNumbers q(n, l, m);
      CHECK(q.radial_nodes() == n - l - 1);
    } else {
      CHECK_THROWS_AS(QuantumNumbers(n, l, m), InvalidQuantumNumbers);
    }
  }
}

TEST_CASE("binding energy") {
  const PhysicalParams p;
  BoundState b = BoundState::from_energy(QuantumNumbers(1, 0), -0.5, p);
  CHECK(binding_energy(b, p) == 0.5);
  CHECK(b.system_mass + binding_energy(b, p) / (p.c * p.c) == p.rest_mass);
  CHECK(b.e_total == -0.5 + 1.0);

  b = BoundState::from_energy(QuantumNumbers(1, 0), 0.0, p);
  CHECK_THROWS_AS(binding_energy(b, p), NotBound);
}

TEST_CASE("bound state records keep mass and energy consistent") {
  const PhysicalParams p;
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> e(-0.9, -1e-9);
  for (int i = 0; i < 1000; ++i) {
    const BoundState b = BoundState::from_energy(QuantumNumbers(2, 1), e(rng), p);
    CHECK(b.system_mass + binding_energy(b, p) == doctest::Approx(p.rest_mass).epsilon(1e-15));
    CHECK(b.system_mass > 0.0);
    CHECK(b.system_mass < p.rest_mass);
  }
}

TEST_CASE("potential spec") {
  const PhysicalParams p;
  const PotentialSpec c = PotentialSpec::coulomb(2.0);
  CHECK(c.has_vector());
  CHECK_FALSE(c.has_scalar());
  CHECK(evaluate_term(c.vector_part, 0.5, p.coupling_sq()) == doctest::Approx(-2.0 * p.alpha / 0.5));

  const PotentialSpec h = PotentialSpec::hulthen(1.0, 0.2, p);
  const double lambda = std::get<HulthenTerm>(h.vector_part).lambda;
  CHECK(lambda == doctest::Approx(0.2 / p.bohr_radius()));
  // Coulomb-like at short range
  const double r = 1e-6;
  CHECK(evaluate_term(h.vector_part, r, p.alpha) ==
        doctest::Approx(-p.alpha / r + p.alpha * lambda / 2.0).epsilon(1e-9));
  const LaurentCoefficients lc = laurent_coefficients(h.vector_part, p.alpha);
  CHECK(lc.inverse_r == p.alpha);
  CHECK(lc.constant == doctest::Approx(p.alpha * lambda / 2.0));

  CHECK_THROWS_AS(PotentialSpec::hulthen(1.0, -1.0, p), InvalidParams);
  PotentialSpec eq = h;
  eq.scalar_part = eq.vector_part;
  CHECK(eq.scalar_equals_vector());
  CHECK_FALSE(h.scalar_equals_vector());
}

TEST_CASE("radial grids") {
  const RadialGrid u = RadialGrid::uniform(10.0, 9);
  CHECK(u.size() == 9);
  CHECK(u.front() == doctest::Approx(1.0));
  CHECK(u.back() == doctest::Approx(9.0));

  const RadialGrid c = RadialGrid::cell_centered(10.0, 10);
  CHECK(c.front() == doctest::Approx(0.5));
  CHECK(c.step() == doctest::Approx(1.0));

  const RadialGrid g = RadialGrid::log_uniform(1e-3, 1e3, 7);
  CHECK(g[3] == doctest::Approx(1.0));
  CHECK(g.step() == doctest::Approx(std::log(10.0)));

  CHECK_THROWS_AS(RadialGrid({1.0, 1.0}, GridSpacing::uniform), InvalidParams);
  CHECK_THROWS_AS(RadialGrid({0.0, 1.0}, GridSpacing::uniform), InvalidParams);
}
