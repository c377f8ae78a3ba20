#pragma once

#include <stdexcept>
#include <string>

namespace wanderer {

// Process exit codes used by the command-line tool.
enum class ExitCode : int {
  ok = 0,
  config_error = 2,
  schedule_violation = 3,
  io_error = 4,
  divergence = 5,
};

// Base class so callers can catch every simulator failure in one place.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, ExitCode code)
      : std::runtime_error(what), code_(code) {}
  ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(what, ExitCode::config_error) {}
};

class ScheduleViolation : public Error {
 public:
  explicit ScheduleViolation(const std::string& what)
      : Error(what, ExitCode::schedule_violation) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what, ExitCode::io_error) {}
};

// Raised when a state variable leaves the finite range of binary64.
class DivergenceError : public Error {
 public:
  DivergenceError(const std::string& what, int iteration)
      : Error(what, ExitCode::divergence), iteration_(iteration) {}
  int iteration() const noexcept { return iteration_; }

 private:
  int iteration_;
};

}  // namespace wanderer
