#pragma once

#include <stdexcept>
#include <string>

#include "etensor/report.hpp"

namespace etensor {

/// Malformed input text or file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Incompatible dimensions or cochain spaces.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dense tensor would exceed the configured entry cap.
class SizeCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An operation that presumes a verified structure was handed an unverified one.
class UnverifiedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A constructor refused its input; the report carries the witnesses.
class RejectedError : public std::runtime_error {
 public:
  RejectedError(const std::string& what, Report report)
      : std::runtime_error(what), report_(std::move(report)) {}

  const Report& report() const noexcept { return report_; }

 private:
  Report report_;
};

}  // namespace etensor
