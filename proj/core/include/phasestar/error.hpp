#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace phasestar {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Exact value does not fit in a double.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Parameter outside the supported domain (hbar = 0, s > 0 kernels, N < 2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed. `offset` is the byte offset of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace phasestar
