#include "kgbound/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "kgbound/errors.hpp"

namespace kgbound {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw InvalidParams("Gauss-Legendre order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged root
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

namespace {

const GaussRule& coarse_rule() {
  static const GaussRule r = gauss_legendre(10);
  return r;
}
const GaussRule& fine_rule() {
  static const GaussRule r = gauss_legendre(20);
  return r;
}

double apply(const GaussRule& rule, const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return s * half;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double tol, int initial_panels, int max_panels) {
  if (!(b > a)) throw InvalidParams("integration interval must satisfy a < b");
  struct Panel {
    double a, b, coarse, fine;
  };
  std::vector<Panel> pending;
  const double w = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i) {
    const double pa = a + w * i;
    const double pb = i + 1 == initial_panels ? b : a + w * (i + 1);
    pending.push_back({pa, pb, apply(coarse_rule(), f, pa, pb), apply(fine_rule(), f, pa, pb)});
  }
  double total_scale = 0.0;
  for (const auto& p : pending) total_scale += std::abs(p.fine);

  QuadratureResult out;
  int panels = initial_panels;
  while (!pending.empty()) {
    Panel p = pending.back();
    pending.pop_back();
    const double err = std::abs(p.fine - p.coarse);
    if (err <= tol * std::max(total_scale, 1e-300) || err == 0.0) {
      out.value += p.fine;
      out.error_estimate += err;
      ++out.panels;
      continue;
    }
    if (panels >= max_panels) throw QuadratureFailure("adaptive quadrature exceeded panel budget");
    const double m = 0.5 * (p.a + p.b);
    pending.push_back({p.a, m, apply(coarse_rule(), f, p.a, m), apply(fine_rule(), f, p.a, m)});
    pending.push_back({m, p.b, apply(coarse_rule(), f, m, p.b), apply(fine_rule(), f, m, p.b)});
    ++panels;
  }
  if (!std::isfinite(out.value)) throw QuadratureFailure("quadrature produced a non-finite value");
  return out;
}

QuadratureResult integrate_log_panels(const std::function<double(double)>& f, double r_min,
                                      double r_max, double tol, int initial_panels) {
  if (!(r_min > 0.0) || !(r_max > r_min)) {
    throw InvalidParams("log-panel quadrature needs 0 < r_min < r_max");
  }
  auto g = [&f](double x) {
    const double r = std::exp(x);
    return f(r) * r;
  };
  return integrate_adaptive(g, std::log(r_min), std::log(r_max), tol, initial_panels);
}

}  // namespace kgbound
