#pragma once

#include <functional>
#include <vector>

namespace kgbound {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
};

/// Adaptive composite Gauss-Legendre on [a, b]: a panel is accepted when its
/// 10- and 20-point estimates agree to `tol` relative to the running total.
/// Throws QuadratureFailure when the panel budget runs out.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double tol = 1e-13, int initial_panels = 8,
                                    int max_panels = 1 << 14);

/// Integral of f(r) dr over [r_min, r_max] on panels uniform in log r.
QuadratureResult integrate_log_panels(const std::function<double(double)>& f, double r_min,
                                      double r_max, double tol = 1e-13, int initial_panels = 32);

}  // namespace kgbound
