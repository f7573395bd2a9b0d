#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "kgbound/errors.hpp"
#include "kgbound/quadrature.hpp"

using namespace kgbound;

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
  for (int n : {1, 2, 5, 10, 20, 40}) {
    const GaussRule r = gauss_legendre(n);
    CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-14));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      const double exact = k % 2 == 1 ? 0.0 : 2.0 / (k + 1);
      CHECK(std::abs(s - exact) < 1e-13);
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), InvalidParams);
}

TEST_CASE("adaptive integration") {
  const QuadratureResult a = integrate_adaptive([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
  CHECK(a.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(a.panels >= 8);

  // Integrable kink resolved by bisection
  const QuadratureResult b = integrate_adaptive([](double x) { return std::abs(x - 0.3); }, 0.0, 1.0);
  CHECK(b.value == doctest::Approx(0.09 / 2 + 0.49 / 2).epsilon(1e-12));

  CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 1.0, 0.0), InvalidParams);
}

TEST_CASE("adaptive integration reports failure when the budget runs out") {
  CHECK_THROWS_AS(
      integrate_adaptive([](double x) { return std::sin(1.0 / x); }, 1e-9, 1.0, 1e-15, 2, 16),
      QuadratureFailure);
}

TEST_CASE("log panels handle wide ranges") {
  // int_0^inf r^2 e^{-r} dr = 2
  const QuadratureResult r =
      integrate_log_panels([](double x) { return x * x * std::exp(-x); }, 1e-12, 200.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
}
