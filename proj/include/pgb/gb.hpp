#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgb/polynomial.hpp"

namespace pgb {

// Finitely generated ideal. Zero generators are dropped on construction;
// an empty generator list is the zero ideal.
struct Ideal {
  RingPtr ring;
  std::vector<Polynomial> generators;

  Ideal(RingPtr r, std::vector<Polynomial> gens);
  bool is_zero_ideal() const { return generators.empty(); }
};

// Cooperative budget for long Gröbner computations. Each treated
// S-pair costs one unit; exhaustion throws budget_exceeded.
struct Budget {
  std::uint64_t pairs_left = UINT64_MAX;
  void spend();
};

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> elements;  // ascending by leading monomial, canonically scaled
  bool reduced = true;

  bool is_trivial() const {
    return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
  }
};

struct NormalFormResult {
  Polynomial remainder;
  // Cofactors aligned with the divisor list: f = remainder + sum c_i g_i.
  std::vector<Polynomial> cofactors;
};

// Division algorithm in the full ring; the remainder has no monomial
// divisible by any leading monomial of G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);
NormalFormResult normal_form_ex(const Polynomial& f, const std::vector<Polynomial>& G,
                                bool record_cofactors);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Buchberger with normal pair selection and the standard pair criteria;
// output is the unique reduced basis (canonically scaled, sorted).
GroebnerBasis buchberger(const Ideal& ideal, Budget* budget = nullptr);
GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         Budget* budget = nullptr);

struct DimensionResult {
  int dim;
  std::vector<std::string> witness;  // one maximum independent symbol set
};

// Krull dimension of the quotient ring via independent sets modulo the
// leading-term ideal. Throws unit_ideal_error on the unit ideal.
DimensionResult dimension(const Ideal& ideal, Budget* budget = nullptr);

// Largest subset of symbol indices in [lo, hi) such that no leading
// monomial is supported entirely inside it.
std::vector<std::uint32_t> max_independent_set(const std::vector<Monomial>& lms, std::uint32_t lo,
                                               std::uint32_t hi);

}  // namespace pgb
