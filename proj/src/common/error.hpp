#pragma once

#include <stdexcept>
#include <string>

namespace gaugeline {

enum class ErrorKind {
  Domain,      // physically invalid argument (non-positive frequency, ...)
  Config,      // structurally invalid setup (unknown level, cutoff too small, ...)
  Parse,       // malformed text input
  Integrator,  // ODE step-size underflow or non-finite state
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

class IntegratorError : public Error {
 public:
  explicit IntegratorError(const std::string& what) : Error(ErrorKind::Integrator, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::Io, what) {}
};

/// Parse failure carrying a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, int column, const std::string& msg)
      : Error(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" +
                                    std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace gaugeline
