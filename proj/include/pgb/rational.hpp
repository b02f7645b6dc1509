#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pgb {

// Exact rational coefficients. mpq_class keeps values canonical
// (reduced, positive denominator), which the whole library relies on.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Canonical text form "p" or "p/q".
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace pgb
