#pragma once

#include <stdexcept>
#include <string>

namespace fracper {

/// Base class for every numeric failure raised by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class domain_error : public error {
public:
  using error::error;
};

/// Gamma evaluated at a non-positive integer.
class pole_error : public domain_error {
public:
  using domain_error::domain_error;
};

/// An evaluation strategy could not certify its tolerance.
class convergence_error : public error {
public:
  using error::error;
};

/// A documented precondition of an operation is violated.
class precondition_error : public error {
public:
  using error::error;
};

/// Sampled data does not span the interval an operation needs.
class coverage_error : public precondition_error {
public:
  using precondition_error::precondition_error;
};

/// Finite-difference fallback lacks enough samples.
class insufficient_samples_error : public precondition_error {
public:
  using precondition_error::precondition_error;
};

/// A Mellin-domain argument lies outside its convergence strip.
class strip_error : public domain_error {
public:
  using domain_error::domain_error;
};

/// A time-stepping solve left the admissible state region.
class divergence_error : public error {
public:
  using error::error;
};

/// Lookup of a right-hand side that is not in the built-in registry.
class unknown_system_error : public precondition_error {
public:
  using precondition_error::precondition_error;
};

/// A signal has no detectable oscillation to estimate a period from.
class no_oscillation_error : public error {
public:
  using error::error;
};

} // namespace fracper
