#pragma once

#include <stdexcept>
#include <string>

namespace uavbs {

// Base of every error the library throws. Each subclass maps to one CLI exit
// status (see tools/uavbs_cli.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Two points of a link coincide.
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

// A computed quantity left its valid range or became non-finite.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature failed to reach its tolerance within budget.
class QuadratureError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// The UAV energy budget cannot cover the transmit energy alone.
class InfeasibleBudget : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace uavbs
