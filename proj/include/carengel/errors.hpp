#ifndef CARENGEL_ERRORS_HPP
#define CARENGEL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace carengel {

// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error while parsing an expression string. `offset` is the byte
// offset into the input at which the error was detected.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("parse error at offset " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Evaluation hit a pole: division by a value below the machine-epsilon
// guard, or a tan/sec pole.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error("pole: " + what) {}
};

// Precondition violation on a domain-level operation (bad offset, angle
// out of range, degenerate input, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace carengel

#endif
