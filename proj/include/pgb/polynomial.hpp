#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgb/error.hpp"
#include "pgb/monomial.hpp"
#include "pgb/rational.hpp"
#include "pgb/ring.hpp"

namespace pgb {

struct Term {
  Rat coeff;
  Monomial mono;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept strictly descending under the ring's combined order,
// never with zero coefficients; the zero polynomial has no terms.
// Values are immutable after construction.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr& ring, const Rat& c);
  static Polynomial symbol(const RingPtr& ring, const std::string& name);
  static Polynomial from_monomial(const RingPtr& ring, const Rat& c, const Monomial& m);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return ts_; }
  bool is_zero() const { return ts_.empty(); }
  bool is_constant() const { return ts_.empty() || (ts_.size() == 1 && ts_[0].mono.is_one()); }
  std::size_t term_count() const { return ts_.size(); }

  const Term& leading_term() const;  // throws on zero
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rat& leading_coeff_rat() const { return leading_term().coeff; }

  // Leading structure with respect to the variables only: the maximal
  // x-part among the terms, and its cofactor, a parameter polynomial.
  Monomial leading_x_monomial() const;
  Polynomial leading_x_coeff() const;
  std::uint64_t degree() const;
  std::uint64_t degree_in(std::uint32_t symbol) const;
  bool supported_in(std::uint32_t lo, std::uint32_t hi) const;
  bool parameters_only() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator*(const Rat& c) const;
  // f * c*m without building a temporary polynomial.
  Polynomial times_term(const Rat& c, const Monomial& m) const;

  bool operator==(const Polynomial& g) const;

  // Full evaluation at a point assigning every symbol that occurs.
  Rat eval(const std::map<std::string, Rat>& point) const;
  // Substitutes rationals for every parameter; result involves variables only.
  Polynomial specialize(const std::map<std::string, Rat>& point) const;
  // Partial substitution of arbitrary symbols.
  Polynomial substitute(const std::map<std::string, Rat>& point) const;

  Polynomial derivative(std::uint32_t symbol) const;

  // Clears denominators, divides by the integer content and makes the
  // order-leading coefficient positive: the canonical scaling used for
  // all basis comparisons.
  Polynomial canonical_scaled() const;

  // f = content * primitive with content in K[u]; the content carries a
  // rational factor chosen so the primitive part is canonically scaled.
  std::pair<Polynomial, Polynomial> content_primitive() const;  // throws on zero

  // Coefficient (in K[u]) of the given x-part.
  Polynomial x_coefficient(const Monomial& x_part) const;
  // Distinct x-parts, descending.
  std::vector<Monomial> x_monomials() const;
  // Coefficient of symbol^k, viewing the polynomial as univariate in symbol.
  Polynomial coeff_of_power(std::uint32_t symbol, std::uint64_t k) const;

  std::string str() const;

  // Rebuilds the polynomial in another ring, matching symbols by name.
  Polynomial transport(const RingPtr& target) const;

 private:
  RingPtr ring_;
  std::vector<Term> ts_;

  void normalize();
  void check_same_ring(const Polynomial& g) const;
};

// Multivariate gcd over Q (primitive PRS); results canonically scaled.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

// Exact division; throws internal_error when g does not divide f.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Largest divisor with the same zero set and no repeated factors.
Polynomial squarefree_part(const Polynomial& f);  // throws on zero

// Deterministic total order (leading monomials first, then termwise).
bool poly_less(const Polynomial& a, const Polynomial& b);

std::string to_string(const std::vector<Polynomial>& polys);

}  // namespace pgb
