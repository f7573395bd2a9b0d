#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace kgbound {

/// Symmetric tridiagonal matrix; off[i] couples rows i and i+1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const noexcept { return diag.size(); }
  /// Gershgorin interval containing every eigenvalue.
  std::pair<double, double> gershgorin() const noexcept;
  std::vector<double> multiply(std::span<const double> x) const;
};

/// Number of eigenvalues strictly below x (Sturm sequence of LDL^T pivots).
std::size_t sturm_count(const SymTridiagonal& t, double x) noexcept;

/// index-th smallest eigenvalue (0-based) by bisection.
double bisect_eigenvalue(const SymTridiagonal& t, std::size_t index);

/// Solves (sub, diag, sup) x = rhs by Gaussian elimination with partial pivoting.
/// sub[i] is A(i+1, i), sup[i] is A(i, i+1).
std::vector<double> solve_tridiagonal(std::span<const double> sub, std::span<const double> diag,
                                      std::span<const double> sup, std::span<const double> rhs);

/// Eigenvector for an eigenvalue estimate `shift` by inverse iteration.
std::vector<double> inverse_iteration(const SymTridiagonal& t, double shift, int iterations = 3);

}  // namespace kgbound
