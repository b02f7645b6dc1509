#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace pgb {

// Power product over the symbols of a ring. Stored sparsely as
// (symbol index, exponent) pairs sorted by index; zero exponents are
// never stored, so the empty list is the monomial 1.
class Monomial {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Entry> entries);

  static Monomial one() { return Monomial(); }
  static Monomial var(std::uint32_t index, std::uint32_t exp = 1);

  bool is_one() const { return e_.empty(); }
  const std::vector<Entry>& entries() const { return e_; }
  std::uint32_t exponent(std::uint32_t index) const;

  std::uint64_t degree() const;
  // Total degree restricted to symbol indices in [lo, hi).
  std::uint64_t degree_in_range(std::uint32_t lo, std::uint32_t hi) const;
  std::uint64_t max_exponent() const;

  Monomial operator*(const Monomial& other) const;
  // Exact division; nullopt when other does not divide *this.
  std::optional<Monomial> divide(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;
  bool coprime_with(const Monomial& other) const;

  // Restriction to the index window [lo, hi); other entries dropped.
  Monomial restrict(std::uint32_t lo, std::uint32_t hi) const;
  bool supported_in(std::uint32_t lo, std::uint32_t hi) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return e_ == other.e_; }

 private:
  std::vector<Entry> e_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

}  // namespace pgb
