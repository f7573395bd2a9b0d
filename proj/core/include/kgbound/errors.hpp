#pragma once

#include <stdexcept>
#include <string>

namespace kgbound {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs that describe no physical bound state (supercritical coupling,
/// invalid quantum numbers, unbound energies, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to deliver its accuracy contract.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Z*alpha >= l + 1/2: the quantum defect becomes complex.
class SupercriticalCoupling : public DomainError {
 public:
  SupercriticalCoupling(double z_alpha, int l);
  double z_alpha() const noexcept { return z_alpha_; }
  int l() const noexcept { return l_; }

 private:
  double z_alpha_;
  int l_;
};

class InvalidQuantumNumbers : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidParams : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotBound : public DomainError {
 public:
  using DomainError::DomainError;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class SuperluminalBoost : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedCombination : public DomainError {
 public:
  using DomainError::DomainError;
};

/// No eigenpair with the requested node count and negative energy.
class StateNotFound : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateRecurrence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class QuadratureFailure : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class TailNotConverged : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Self-consistency loop exhausted its iteration budget.
class NoConvergence : public NumericalError {
 public:
  NoConvergence(const std::string& what, double last_mass, double previous_mass);
  double last_mass() const noexcept { return last_; }
  double previous_mass() const noexcept { return previous_; }

 private:
  double last_;
  double previous_;
};

}  // namespace kgbound
