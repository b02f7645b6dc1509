#include "pgb/monomial.hpp"

#include <algorithm>

#include "pgb/error.hpp"

namespace pgb {

Monomial::Monomial(std::vector<Entry> entries) : e_(std::move(entries)) {
  std::sort(e_.begin(), e_.end());
  std::vector<Entry> merged;
  for (const auto& [idx, exp] : e_) {
    if (exp == 0) continue;
    if (!merged.empty() && merged.back().first == idx)
      merged.back().second += exp;
    else
      merged.push_back({idx, exp});
  }
  e_ = std::move(merged);
}

Monomial Monomial::var(std::uint32_t index, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.e_.push_back({index, exp});
  return m;
}

std::uint32_t Monomial::exponent(std::uint32_t index) const {
  auto it = std::lower_bound(e_.begin(), e_.end(), Entry{index, 0});
  if (it != e_.end() && it->first == index) return it->second;
  return 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [_, exp] : e_) d += exp;
  return d;
}

std::uint64_t Monomial::degree_in_range(std::uint32_t lo, std::uint32_t hi) const {
  std::uint64_t d = 0;
  for (const auto& [idx, exp] : e_)
    if (idx >= lo && idx < hi) d += exp;
  return d;
}

std::uint64_t Monomial::max_exponent() const {
  std::uint64_t m = 0;
  for (const auto& [_, exp] : e_) m = std::max<std::uint64_t>(m, exp);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  r.e_.reserve(e_.size() + other.e_.size());
  auto a = e_.begin(), b = other.e_.begin();
  while (a != e_.end() || b != other.e_.end()) {
    if (b == other.e_.end() || (a != e_.end() && a->first < b->first))
      r.e_.push_back(*a++);
    else if (a == e_.end() || b->first < a->first)
      r.e_.push_back(*b++);
    else {
      r.e_.push_back({a->first, a->second + b->second});
      ++a, ++b;
    }
  }
  return r;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial r;
  auto a = e_.begin(), b = other.e_.begin();
  while (b != other.e_.end()) {
    if (a == e_.end() || a->first > b->first) return std::nullopt;
    if (a->first < b->first) {
      r.e_.push_back(*a++);
      continue;
    }
    if (a->second < b->second) return std::nullopt;
    if (a->second > b->second) r.e_.push_back({a->first, a->second - b->second});
    ++a, ++b;
  }
  r.e_.insert(r.e_.end(), a, e_.end());
  return r;
}

bool Monomial::divisible_by(const Monomial& other) const {
  auto a = e_.begin(), b = other.e_.begin();
  while (b != other.e_.end()) {
    while (a != e_.end() && a->first < b->first) ++a;
    if (a == e_.end() || a->first != b->first || a->second < b->second) return false;
    ++a, ++b;
  }
  return true;
}

bool Monomial::coprime_with(const Monomial& other) const {
  auto a = e_.begin(), b = other.e_.begin();
  while (a != e_.end() && b != other.e_.end()) {
    if (a->first == b->first) return false;
    if (a->first < b->first)
      ++a;
    else
      ++b;
  }
  return true;
}

Monomial Monomial::restrict(std::uint32_t lo, std::uint32_t hi) const {
  Monomial r;
  for (const auto& ent : e_)
    if (ent.first >= lo && ent.first < hi) r.e_.push_back(ent);
  return r;
}

bool Monomial::supported_in(std::uint32_t lo, std::uint32_t hi) const {
  for (const auto& [idx, _] : e_)
    if (idx < lo || idx >= hi) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.e_.begin();
  auto j = b.e_.begin();
  while (i != a.e_.end() || j != b.e_.end()) {
    if (j == b.e_.end() || (i != a.e_.end() && i->first < j->first))
      r.e_.push_back(*i++);
    else if (i == a.e_.end() || j->first < i->first)
      r.e_.push_back(*j++);
    else {
      r.e_.push_back({i->first, std::max(i->second, j->second)});
      ++i, ++j;
    }
  }
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.e_.begin();
  auto j = b.e_.begin();
  while (i != a.e_.end() && j != b.e_.end()) {
    if (i->first < j->first)
      ++i;
    else if (j->first < i->first)
      ++j;
    else {
      r.e_.push_back({i->first, std::min(i->second, j->second)});
      ++i, ++j;
    }
  }
  return r;
}

}  // namespace pgb
