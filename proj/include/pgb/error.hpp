#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pgb {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ring_mismatch : error {
  ring_mismatch() : error("operands belong to different rings") {}
};

struct zero_polynomial_error : error {
  explicit zero_polynomial_error(const std::string& op)
      : error(op + ": zero polynomial not allowed") {}
};

// Raised when the cooperative pair budget of a Gröbner computation runs out.
struct budget_exceeded : error {
  explicit budget_exceeded(const std::string& what) : error(what) {}
};

// Dimension of the zero ring (unit ideal) is undefined.
struct unit_ideal_error : error {
  unit_ideal_error() : error("unit ideal: quotient ring is zero, dimension undefined") {}
};

struct parse_error : error {
  std::size_t line, column;
  parse_error(std::size_t l, std::size_t c, const std::string& msg)
      : error("parse error at " + std::to_string(l) + ":" + std::to_string(c) + ": " + msg),
        line(l),
        column(c) {}
};

struct internal_error : error {
  explicit internal_error(const std::string& msg) : error("internal invariant violated: " + msg) {}
};

}  // namespace pgb
