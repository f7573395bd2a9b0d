#include "kgbound/core_model.hpp"

#include <cmath>
#include <sstream>

#include "kgbound/errors.hpp"

namespace kgbound {

SupercriticalCoupling::SupercriticalCoupling(double z_alpha, int l)
    : DomainError("supercritical coupling: Z*alpha = " + std::to_string(z_alpha) +
                  " >= l + 1/2 for l = " + std::to_string(l)),
      z_alpha_(z_alpha),
      l_(l) {}

NoConvergence::NoConvergence(const std::string& what, double last_mass, double previous_mass)
    : NumericalError(what), last_(last_mass), previous_(previous_mass) {}

PhysicalParams PhysicalParams::natural(double z_number, double alpha) {
  PhysicalParams p;
  p.z_number = z_number;
  p.alpha = alpha;
  p.check();
  return p;
}

void PhysicalParams::check() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(rest_mass) || !positive(z_number) || !positive(alpha) || !positive(c) ||
      !positive(hbar)) {
    throw InvalidParams("physical parameters must be finite and strictly positive");
  }
  if (units == UnitSystem::natural && (hbar != 1.0 || c != 1.0 || rest_mass != 1.0)) {
    throw InvalidParams("natural units require hbar = c = rest_mass = 1");
  }
}

QuantumNumbers::QuantumNumbers(int n, int l, int m) : n_(n), l_(l), m_(m) {
  if (n < 1) throw InvalidQuantumNumbers("n must be >= 1, got " + std::to_string(n));
  if (l < 0 || l > n - 1) {
    throw InvalidQuantumNumbers("l must satisfy 0 <= l <= n-1, got n=" + std::to_string(n) +
                                " l=" + std::to_string(l));
  }
  if (m < -l || m > l) {
    throw InvalidQuantumNumbers("|m| must not exceed l, got l=" + std::to_string(l) +
                                " m=" + std::to_string(m));
  }
}

PotentialSpec PotentialSpec::coulomb(double z) {
  PotentialSpec s;
  s.vector_part = CoulombTerm{z};
  return s;
}

PotentialSpec PotentialSpec::hulthen(double z, double lambda_per_bohr, const PhysicalParams& p) {
  PotentialSpec s;
  s.vector_part = HulthenTerm{z, lambda_per_bohr / p.bohr_radius()};
  s.check();
  return s;
}

namespace {

bool same_term(const PotentialTerm& a, const PotentialTerm& b) {
  if (a.index() != b.index()) return false;
  if (auto* ca = std::get_if<CoulombTerm>(&a)) return ca->z == std::get<CoulombTerm>(b).z;
  if (auto* ha = std::get_if<HulthenTerm>(&a)) {
    const auto& hb = std::get<HulthenTerm>(b);
    return ha->z == hb.z && ha->lambda == hb.lambda;
  }
  return true;
}

std::string describe_term(const PotentialTerm& t) {
  std::ostringstream os;
  os.precision(12);
  if (auto* c = std::get_if<CoulombTerm>(&t)) {
    os << "coulomb(z=" << c->z << ")";
  } else if (auto* h = std::get_if<HulthenTerm>(&t)) {
    os << "hulthen(z=" << h->z << ";lambda=" << h->lambda << ")";
  } else {
    os << "none";
  }
  return os.str();
}

}  // namespace

bool PotentialSpec::scalar_equals_vector() const noexcept {
  return same_term(vector_part, scalar_part);
}

void PotentialSpec::check() const {
  for (const auto* t : {&vector_part, &scalar_part}) {
    if (auto* h = std::get_if<HulthenTerm>(t)) {
      if (!(h->lambda > 0.0) || !std::isfinite(h->lambda)) {
        throw InvalidParams("Hulthen screening lambda must be > 0");
      }
    }
  }
}

std::string PotentialSpec::describe() const {
  return "U=" + describe_term(vector_part) + " S=" + describe_term(scalar_part);
}

double evaluate_term(const PotentialTerm& term, double r, double coupling_sq) noexcept {
  if (auto* c = std::get_if<CoulombTerm>(&term)) return -c->z * coupling_sq / r;
  if (auto* h = std::get_if<HulthenTerm>(&term)) {
    // e^{-x}/(1-e^{-x}) = 1/expm1(x)
    return -h->z * coupling_sq * h->lambda / std::expm1(h->lambda * r);
  }
  return 0.0;
}

LaurentCoefficients laurent_coefficients(const PotentialTerm& term, double coupling_sq) noexcept {
  if (auto* c = std::get_if<CoulombTerm>(&term)) return {c->z * coupling_sq, 0.0};
  if (auto* h = std::get_if<HulthenTerm>(&term)) {
    const double a = h->z * coupling_sq;
    return {a, a * h->lambda / 2.0};
  }
  return {};
}

RadialGrid::RadialGrid(std::vector<double> points, GridSpacing spacing)
    : points_(std::move(points)), spacing_(spacing) {
  if (points_.empty()) throw InvalidParams("radial grid must not be empty");
  if (!(points_.front() > 0.0)) throw InvalidParams("radial grid points must be positive");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i] > points_[i - 1])) {
      throw InvalidParams("radial grid points must be strictly increasing");
    }
  }
  if (points_.size() > 1) {
    step_ = spacing_ == GridSpacing::log_uniform ? std::log(points_[1] / points_[0])
                                                  : points_[1] - points_[0];
  }
}

RadialGrid RadialGrid::uniform(double r_max, std::size_t n) {
  const double h = r_max / static_cast<double>(n + 1);
  std::vector<double> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = h * static_cast<double>(i + 1);
  return RadialGrid(std::move(pts), GridSpacing::uniform);
}

RadialGrid RadialGrid::cell_centered(double r_max, std::size_t n) {
  const double h = r_max / static_cast<double>(n);
  std::vector<double> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = h * (static_cast<double>(i) + 0.5);
  RadialGrid g(std::move(pts), GridSpacing::cell_centered);
  g.step_ = h;
  return g;
}

RadialGrid RadialGrid::log_uniform(double r_min, double r_max, std::size_t n) {
  if (n < 2 || !(r_max > r_min) || !(r_min > 0.0)) {
    throw InvalidParams("log grid needs 0 < r_min < r_max and n >= 2");
  }
  const double x0 = std::log(r_min);
  const double dx = (std::log(r_max) - x0) / static_cast<double>(n - 1);
  std::vector<double> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = std::exp(x0 + dx * static_cast<double>(i));
  RadialGrid g(std::move(pts), GridSpacing::log_uniform);
  g.step_ = dx;
  return g;
}

BoundState BoundState::from_energy(QuantumNumbers qn, double e_prime, const PhysicalParams& p) {
  BoundState b;
  b.qn = qn;
  b.e_prime = e_prime;
  b.e_total = e_prime + p.rest_mass * p.c * p.c;
  b.system_mass = p.rest_mass + e_prime / (p.c * p.c);
  b.node_count = qn.radial_nodes();
  return b;
}

void require_subcritical(const PhysicalParams& p, int l) {
  const double za = p.z_alpha();
  if (!(za < l + 0.5)) throw SupercriticalCoupling(za, l);
}

std::pair<PhysicalParams, QuantumNumbers> validate_params(const PhysicalParams& p,
                                                          const QuantumNumbers& qn) {
  p.check();
  require_subcritical(p, qn.l());
  return {p, qn};
}

double binding_energy(const BoundState& b, const PhysicalParams& p) {
  if (!(b.e_prime < 0.0)) throw NotBound("state is not bound: E' >= 0");
  // |E'| = (m0 - m) c^2 with m = m0 + E'/c^2
  (void)p;
  return -b.e_prime;
}

}  // namespace kgbound
