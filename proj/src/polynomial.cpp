#include "pgb/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace pgb {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), ts_(std::move(terms)) {
  normalize();
}

void Polynomial::normalize() {
  std::sort(ts_.begin(), ts_.end(),
            [&](const Term& a, const Term& b) { return ring_->compare(a.mono, b.mono) > 0; });
  std::vector<Term> merged;
  merged.reserve(ts_.size());
  for (auto& t : ts_) {
    if (!merged.empty() && merged.back().mono == t.mono)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  ts_.clear();
  for (auto& t : merged)
    if (t.coeff != 0) ts_.push_back(std::move(t));
}

void Polynomial::check_same_ring(const Polynomial& g) const {
  if (ring_.get() != g.ring_.get() && !ring_->same_ring(*g.ring_)) throw ring_mismatch();
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rat& c) {
  Polynomial p(ring);
  if (c != 0) p.ts_.push_back({c, Monomial::one()});
  return p;
}

Polynomial Polynomial::symbol(const RingPtr& ring, const std::string& name) {
  auto idx = ring->index_of(name);
  if (!idx) throw error("unknown symbol: " + name);
  Polynomial p(ring);
  p.ts_.push_back({Rat(1), Monomial::var(*idx)});
  return p;
}

Polynomial Polynomial::from_monomial(const RingPtr& ring, const Rat& c, const Monomial& m) {
  Polynomial p(ring);
  if (c != 0) p.ts_.push_back({c, m});
  return p;
}

const Term& Polynomial::leading_term() const {
  if (ts_.empty()) throw zero_polynomial_error("leading_term");
  return ts_.front();
}

Monomial Polynomial::leading_x_monomial() const {
  // Under the block order the first term carries the maximal x-part.
  return leading_term().mono.restrict(0, ring_->variable_count());
}

Polynomial Polynomial::leading_x_coeff() const { return x_coefficient(leading_x_monomial()); }

Polynomial Polynomial::x_coefficient(const Monomial& x_part) const {
  auto nv = ring_->variable_count();
  Polynomial r(ring_);
  for (const auto& t : ts_)
    if (t.mono.restrict(0, nv) == x_part) r.ts_.push_back({t.coeff, t.mono.restrict(nv, ring_->symbol_count())});
  return r;
}

std::vector<Monomial> Polynomial::x_monomials() const {
  auto nv = ring_->variable_count();
  std::vector<Monomial> ms;
  for (const auto& t : ts_) {
    auto xm = t.mono.restrict(0, nv);
    if (ms.empty() || !(ms.back() == xm)) {
      bool seen = false;
      for (const auto& m : ms)
        if (m == xm) {
          seen = true;
          break;
        }
      if (!seen) ms.push_back(xm);
    }
  }
  return ms;
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : ts_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint64_t Polynomial::degree_in(std::uint32_t symbol) const {
  std::uint64_t d = 0;
  for (const auto& t : ts_) d = std::max<std::uint64_t>(d, t.mono.exponent(symbol));
  return d;
}

bool Polynomial::supported_in(std::uint32_t lo, std::uint32_t hi) const {
  for (const auto& t : ts_)
    if (!t.mono.supported_in(lo, hi)) return false;
  return true;
}

bool Polynomial::parameters_only() const {
  return supported_in(ring_->variable_count(), ring_->symbol_count());
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_same_ring(g);
  Polynomial r(ring_);
  r.ts_.reserve(ts_.size() + g.ts_.size());
  auto a = ts_.begin(), b = g.ts_.begin();
  while (a != ts_.end() || b != g.ts_.end()) {
    if (b == g.ts_.end())
      r.ts_.push_back(*a++);
    else if (a == ts_.end())
      r.ts_.push_back(*b++);
    else {
      auto c = ring_->compare(a->mono, b->mono);
      if (c > 0)
        r.ts_.push_back(*a++);
      else if (c < 0)
        r.ts_.push_back(*b++);
      else {
        Rat s = a->coeff + b->coeff;
        if (s != 0) r.ts_.push_back({std::move(s), a->mono});
        ++a, ++b;
      }
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.ts_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::times_term(const Rat& c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  r.ts_.reserve(ts_.size());
  for (const auto& t : ts_) r.ts_.push_back({t.coeff * c, t.mono * m});
  return r;
}

Polynomial Polynomial::operator*(const Rat& c) const { return times_term(c, Monomial::one()); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_same_ring(g);
  auto cmp = [this](const Monomial& a, const Monomial& b) { return ring_->compare(a, b) > 0; };
  std::map<Monomial, Rat, decltype(cmp)> acc(cmp);
  for (const auto& s : ts_)
    for (const auto& t : g.ts_) acc[s.mono * t.mono] += s.coeff * t.coeff;
  Polynomial r(ring_);
  for (auto& [m, c] : acc)
    if (c != 0) r.ts_.push_back({std::move(c), m});
  return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (ts_.size() != g.ts_.size()) return false;
  for (std::size_t i = 0; i < ts_.size(); ++i)
    if (ts_[i].coeff != g.ts_[i].coeff || !(ts_[i].mono == g.ts_[i].mono)) return false;
  return true;
}

Rat Polynomial::eval(const std::map<std::string, Rat>& point) const {
  Rat total(0);
  for (const auto& t : ts_) {
    Rat v = t.coeff;
    for (const auto& [idx, exp] : t.mono.entries()) {
      auto it = point.find(ring_->name(idx));
      if (it == point.end()) throw error("eval: missing assignment for " + ring_->name(idx));
      Rat p(1);
      for (std::uint32_t k = 0; k < exp; ++k) p *= it->second;
      v *= p;
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::substitute(const std::map<std::string, Rat>& point) const {
  Polynomial r(ring_);
  std::vector<Term> out;
  for (const auto& t : ts_) {
    Rat c = t.coeff;
    std::vector<Monomial::Entry> rest;
    for (const auto& [idx, exp] : t.mono.entries()) {
      auto it = point.find(ring_->name(idx));
      if (it == point.end()) {
        rest.push_back({idx, exp});
        continue;
      }
      for (std::uint32_t k = 0; k < exp; ++k) c *= it->second;
    }
    if (c != 0) out.push_back({std::move(c), Monomial(std::move(rest))});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::specialize(const std::map<std::string, Rat>& point) const {
  for (std::uint32_t i = ring_->variable_count(); i < ring_->symbol_count(); ++i)
    if (!point.count(ring_->name(i)))
      throw error("specialize: missing assignment for parameter " + ring_->name(i));
  std::map<std::string, Rat> params_only;
  for (std::uint32_t i = ring_->variable_count(); i < ring_->symbol_count(); ++i)
    params_only.emplace(ring_->name(i), point.at(ring_->name(i)));
  return substitute(params_only);
}

Polynomial Polynomial::derivative(std::uint32_t symbol) const {
  std::vector<Term> out;
  for (const auto& t : ts_) {
    auto e = t.mono.exponent(symbol);
    if (e == 0) continue;
    auto m = t.mono.divide(Monomial::var(symbol)).value();
    out.push_back({t.coeff * Rat(static_cast<long>(e)), m});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::canonical_scaled() const {
  if (ts_.empty()) return *this;
  Int den(1), num(0);
  for (const auto& t : ts_) den = lcm(den, Int(t.coeff.get_den()));
  for (const auto& t : ts_) num = gcd(num, Int(t.coeff.get_num() * den / t.coeff.get_den()));
  Rat scale(den, num);
  scale.canonicalize();
  if (ts_.front().coeff < 0) scale = -scale;
  return *this * scale;
}

std::pair<Polynomial, Polynomial> Polynomial::content_primitive() const {
  if (ts_.empty()) throw zero_polynomial_error("content_primitive");
  Polynomial cont(ring_);
  for (const auto& xm : x_monomials()) {
    cont = poly_gcd(cont, x_coefficient(xm));
    if (cont.is_constant()) break;
  }
  if (cont.is_zero() || cont.is_constant()) cont = Polynomial::constant(ring_, Rat(1));
  Polynomial prim = exact_divide(*this, cont);
  Polynomial prim_c = prim.canonical_scaled();
  // Fold the rational adjustment into the content so f = content * primitive.
  Rat q = prim.leading_coeff_rat() / prim_c.leading_coeff_rat();
  return {cont * q, prim_c};
}

Polynomial Polynomial::transport(const RingPtr& target) const {
  if (target->same_ring(*ring_)) {
    Polynomial r = *this;
    return Polynomial(target, r.ts_);
  }
  std::vector<Term> out;
  out.reserve(ts_.size());
  for (const auto& t : ts_) {
    std::vector<Monomial::Entry> es;
    for (const auto& [idx, exp] : t.mono.entries()) {
      auto j = target->index_of(ring_->name(idx));
      if (!j) throw error("transport: symbol " + ring_->name(idx) + " missing in target ring");
      es.push_back({*j, exp});
    }
    out.push_back({t.coeff, Monomial(std::move(es))});
  }
  return Polynomial(target, std::move(out));
}

std::string Polynomial::str() const {
  if (ts_.empty()) return "0";
  std::ostringstream os;
  auto nv = ring_->variable_count();
  bool first = true;
  for (const auto& t : ts_) {
    Rat c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    // Print parameters first, then variables, each in declaration order.
    std::vector<Monomial::Entry> ps, vs;
    for (const auto& ent : t.mono.entries()) (ent.first < nv ? vs : ps).push_back(ent);
    bool printed = false;
    if (c != 1 || (ps.empty() && vs.empty())) {
      os << to_string(c);
      printed = true;
    }
    auto emit = [&](const std::vector<Monomial::Entry>& es) {
      for (const auto& [idx, exp] : es) {
        if (printed) os << "*";
        os << ring_->name(idx);
        if (exp > 1) os << "^" << exp;
        printed = true;
      }
    };
    emit(ps);
    emit(vs);
  }
  return os.str();
}

Polynomial Polynomial::coeff_of_power(std::uint32_t symbol, std::uint64_t k) const {
  std::vector<Term> out;
  for (const auto& t : ts_)
    if (t.mono.exponent(symbol) == k)
      out.push_back(
          {t.coeff,
           t.mono.divide(Monomial::var(symbol, static_cast<std::uint32_t>(k))).value_or(t.mono)});
  return Polynomial(ring_, std::move(out));
}

bool poly_less(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (std::size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    auto c = a.ring()->compare(ta[i].mono, tb[i].mono);
    if (c != 0) return c < 0;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff;
  }
  return ta.size() < tb.size();
}

std::string to_string(const std::vector<Polynomial>& polys) {
  std::string s = "[";
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].str();
  }
  return s + "]";
}

}  // namespace pgb
