#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace freiman {

/// Input that is well-formed but outside the supported mathematical
/// domain, e.g. a non-equigenerated ideal passed to an operation whose
/// defining formula requires equigeneration.  Distinct from
/// std::invalid_argument, which is reserved for contract violations.
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured cap.  Carries the exact
/// count the request would need.
class ResourceLimit : public std::runtime_error {
 public:
  ResourceLimit(std::uint64_t required, std::uint64_t cap);
  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

/// Malformed ideal or poset file.  Lines are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace freiman
