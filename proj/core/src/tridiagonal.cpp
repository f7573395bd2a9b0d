#include "kgbound/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kgbound/errors.hpp"

namespace kgbound {

std::pair<double, double> SymTridiagonal::gershgorin() const noexcept {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < n) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  return {lo, hi};
}

std::vector<double> SymTridiagonal::multiply(std::span<const double> x) const {
  const std::size_t n = diag.size();
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double v = diag[i] * x[i];
    if (i > 0) v += off[i - 1] * x[i - 1];
    if (i + 1 < n) v += off[i] * x[i + 1];
    y[i] = v;
  }
  return y;
}

std::size_t sturm_count(const SymTridiagonal& t, double x) noexcept {
  constexpr double tiny = 1e-300;
  std::size_t count = 0;
  double d = 1.0;
  const std::size_t n = t.diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double b2 = i > 0 ? t.off[i - 1] * t.off[i - 1] : 0.0;
    d = (t.diag[i] - x) - (i > 0 ? b2 / d : 0.0);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

double bisect_eigenvalue(const SymTridiagonal& t, std::size_t index) {
  if (index >= t.size()) throw InvalidParams("eigenvalue index out of range");
  auto [lo, hi] = t.gershgorin();
  const double width = std::max(std::abs(lo), std::abs(hi));
  lo -= 1e-12 * width;
  hi += 1e-12 * width;
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (sturm_count(t, mid) > index) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> solve_tridiagonal(std::span<const double> sub, std::span<const double> diag,
                                      std::span<const double> sup, std::span<const double> rhs) {
  const std::size_t n = diag.size();
  if (n == 0) return {};
  // Row i of U holds u0[i] (diagonal), u1[i], u2[i] (two super-diagonals).
  std::vector<double> u0(diag.begin(), diag.end());
  std::vector<double> u1(n, 0.0);
  std::vector<double> u2(n, 0.0);
  std::vector<double> b(rhs.begin(), rhs.end());
  for (std::size_t i = 0; i + 1 < n; ++i) u1[i] = sup[i];
  std::vector<double> lower(sub.begin(), sub.end());  // row i+1, column i

  const double eps = std::numeric_limits<double>::epsilon();
  double scale = 0.0;
  for (double v : diag) scale = std::max(scale, std::abs(v));
  for (double v : sub) scale = std::max(scale, std::abs(v));
  const double floor_pivot = std::max(scale * eps * eps, 1e-300);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    // candidates: row i (u0[i], u1[i], u2[i]) and row i+1 (lower[i], u0[i+1], u1[i+1])
    double r1_a = lower[i];
    double r1_b = u0[i + 1];
    double r1_c = i + 2 < n ? u1[i + 1] : 0.0;
    if (std::abs(r1_a) > std::abs(u0[i])) {
      std::swap(u0[i], r1_a);
      std::swap(u1[i], r1_b);
      std::swap(u2[i], r1_c);
      std::swap(b[i], b[i + 1]);
    }
    if (std::abs(u0[i]) < floor_pivot) u0[i] = u0[i] < 0.0 ? -floor_pivot : floor_pivot;
    const double f = r1_a / u0[i];
    u0[i + 1] = r1_b - f * u1[i];
    if (i + 2 < n) u1[i + 1] = r1_c - f * u2[i];
    b[i + 1] -= f * b[i];
  }
  if (std::abs(u0[n - 1]) < floor_pivot) u0[n - 1] = u0[n - 1] < 0.0 ? -floor_pivot : floor_pivot;

  std::vector<double> x(n);
  for (std::size_t k = n; k-- > 0;) {
    double v = b[k];
    if (k + 1 < n) v -= u1[k] * x[k + 1];
    if (k + 2 < n) v -= u2[k] * x[k + 2];
    x[k] = v / u0[k];
  }
  return x;
}

std::vector<double> inverse_iteration(const SymTridiagonal& t, double shift, int iterations) {
  const std::size_t n = t.size();
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - shift;
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.25 * std::sin(0.37 * static_cast<double>(i));
  for (int it = 0; it < iterations; ++it) {
    x = solve_tridiagonal(t.off, d, t.off, x);
    double norm = 0.0;
    for (double v : x) norm = std::max(norm, std::abs(v));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      throw NumericalError("inverse iteration broke down");
    }
    for (double& v : x) v /= norm;
  }
  return x;
}

}  // namespace kgbound
