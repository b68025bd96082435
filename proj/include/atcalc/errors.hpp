#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Explicit-state exploration hit its state budget.
class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(std::size_t bound)
      : Error("reachable state space exceeds bound " + std::to_string(bound)), bound_(bound) {}
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t bound_;
};

// A valid attack tree whose goal is not EF-reachable. Never expected; signals a bug.
class EngineInconsistency : public Error {
 public:
  using Error::Error;
};

// A synthesized or refined witness failed its own validity check.
class SelfCheckFailed : public Error {
 public:
  using Error::Error;
};

class UnknownLocation : public Error {
 public:
  explicit UnknownLocation(const std::string& location) : Error("unknown location '" + location + "'") {}
};

class UnknownTransform : public Error {
 public:
  explicit UnknownTransform(const std::string& name) : Error("unknown transform '" + name + "'") {}
};

}  // namespace atcalc
