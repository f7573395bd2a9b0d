#include "kgbound/lorentz.hpp"

#include <cmath>
#include <sstream>

#include "kgbound/errors.hpp"

namespace kgbound {

BoostSpec::BoostSpec(double v, double c) : v_(v), c_(c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InvalidParams("speed of light must be positive");
  beta_ = v / c;
  if (!(std::abs(beta_) < 1.0)) {
    std::ostringstream os;
    os << "boost speed |v| = " << std::abs(v) << " is not below c = " << c;
    throw SuperluminalBoost(os.str());
  }
  gamma_ = 1.0 / std::sqrt((1.0 - beta_) * (1.0 + beta_));
}

CharacterState boost_forward(const CharacterState& s, const BoostSpec& b, double u_prime) {
  const double eps = s.e_total - s.u_potential;
  const double g = b.gamma();
  CharacterState out;
  out.p = s.p;
  out.p[0] = g * (s.p[0] - b.v() / (b.c() * b.c()) * eps);
  const double eps_prime = g * (eps - b.v() * s.p[0]);
  out.u_potential = u_prime;
  out.e_total = eps_prime + u_prime;
  return out;
}

CharacterState boost_backward(const CharacterState& s, const BoostSpec& b, double u) {
  const double eps = s.e_total - s.u_potential;
  const double g = b.gamma();
  CharacterState out;
  out.p = s.p;
  out.p[0] = g * (s.p[0] + b.v() / (b.c() * b.c()) * eps);
  const double eps_orig = g * (eps + b.v() * s.p[0]);
  out.u_potential = u;
  out.e_total = eps_orig + u;
  return out;
}

double invariant_mass_sq(const CharacterState& s, double c) noexcept {
  const double eps = s.e_total - s.u_potential;
  const double p2 = s.p[0] * s.p[0] + s.p[1] * s.p[1] + s.p[2] * s.p[2];
  return eps * eps - c * c * p2;
}

Event boost_event(const Event& e, const BoostSpec& b) noexcept {
  const double g = b.gamma();
  Event out = e;
  out.t = g * (e.t - b.v() * e.x[0] / (b.c() * b.c()));
  out.x[0] = g * (e.x[0] - b.v() * e.t);
  return out;
}

double plane_wave_phase(const CharacterState& s, const Event& e) noexcept {
  return s.e_total * e.t - (s.p[0] * e.x[0] + s.p[1] * e.x[1] + s.p[2] * e.x[2]);
}

double compose_velocity(double v1, double v2, double c) noexcept {
  return (v1 + v2) / (1.0 + v1 * v2 / (c * c));
}

}  // namespace kgbound
