#pragma once

#include <array>

namespace kgbound {

/// (E, p, U) in one inertial frame; E includes the rest energy.
struct CharacterState {
  double e_total = 0.0;
  std::array<double, 3> p{};
  double u_potential = 0.0;
};

/// Boost along +x.
class BoostSpec {
 public:
  /// Throws SuperluminalBoost unless |v| < c.
  BoostSpec(double v, double c = 1.0);
  static BoostSpec from_beta(double beta, double c = 1.0) { return BoostSpec(beta * c, c); }

  double v() const noexcept { return v_; }
  double c() const noexcept { return c_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

 private:
  double v_;
  double c_;
  double beta_;
  double gamma_;
};

/// K -> K'; the target-frame potential is supplied by the caller.
CharacterState boost_forward(const CharacterState& s, const BoostSpec& b, double u_prime);

/// K' -> K.
CharacterState boost_backward(const CharacterState& s, const BoostSpec& b, double u);

/// (E - U)^2 - c^2 |p|^2.
double invariant_mass_sq(const CharacterState& s, double c = 1.0) noexcept;

/// Event (t, x, y, z) under the coordinate boost matching BoostSpec.
struct Event {
  double t = 0.0;
  std::array<double, 3> x{};
};
Event boost_event(const Event& e, const BoostSpec& b) noexcept;

/// E t - p . r.
double plane_wave_phase(const CharacterState& s, const Event& e) noexcept;

/// Relativistic velocity addition, (v1 + v2) / (1 + v1 v2 / c^2).
double compose_velocity(double v1, double v2, double c = 1.0) noexcept;

}  // namespace kgbound
