#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qadm {

enum class ErrorKind {
  NotDivisible,
  NotUnivariate,
  DivisorMeetsInfinity,
  UnsupportedIndex,
  WeightOutOfRange,
  ZeroVector,
  ParityViolation,
  Unstable,
  IllegalReduction,
  TooLarge,
  ChartOutOfRange,
  NotQuasiHomogeneous,
  DegenerateSpecialization,
  IllegalTarget,
  ExponentOverflow,
  PreconditionViolated,
  // Input-shape failures; the CLI reports these as malformed input.
  ParseError,
  InvalidTree,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  const char* name() const { return error_name(kind_); }
  bool malformed_input() const {
    return kind_ == ErrorKind::ParseError || kind_ == ErrorKind::InvalidTree;
  }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorKind::ParseError,
              "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace qadm
