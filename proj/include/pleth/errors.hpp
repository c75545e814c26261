#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pleth {

// Malformed textual input (partition grammar, skew shapes, JSON records).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of a library operation was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionNotExact : public std::runtime_error {
 public:
  DivisionNotExact() : std::runtime_error("polynomial division leaves a non-zero remainder") {}
};

// Raised by the brute-force oracles and the search engine when the requested
// work exceeds the configured budget. `estimate` is a lower bound on the work.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::uint64_t estimate)
      : std::runtime_error(what + " (estimate >= " + std::to_string(estimate) + ")"),
        estimate_(estimate) {}
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

// Two independent routes to the same mathematical quantity disagreed.
// This always indicates a bug in the library.
class InternalDisagreement : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pleth
