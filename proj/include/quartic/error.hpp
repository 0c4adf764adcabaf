#pragma once

#include <stdexcept>
#include <string>

namespace quartic {

enum class ErrorKind {
  InvalidArgument,
  Overflow,
  ScanLimit,
  NotASolution,
  InconsistentInput,
};

/// Base for every error thrown by the library. The kind is what callers
/// (the CLI in particular) dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(ErrorKind::Overflow, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorKind::InvalidArgument, what) {}
};

class ScanLimitError : public Error {
 public:
  explicit ScanLimitError(const std::string& what) : Error(ErrorKind::ScanLimit, what) {}
};

}  // namespace quartic
