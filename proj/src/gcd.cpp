#include <algorithm>
#include <functional>
#include <optional>
#include <set>

#include "pgb/polynomial.hpp"

namespace pgb {

namespace {

std::optional<std::uint32_t> lowest_symbol(const Polynomial& f, const Polynomial& g) {
  std::optional<std::uint32_t> best;
  for (const auto& p : {std::cref(f), std::cref(g)})
    for (const auto& t : p.get().terms())
      for (const auto& [idx, _] : t.mono.entries())
        if (!best || idx < *best) best = idx;
  return best;
}

// Coefficient of s^k, viewing f as univariate in s.
Polynomial coeff_of_power(const Polynomial& f, std::uint32_t s, std::uint64_t k) {
  return f.coeff_of_power(s, k);
}

Polynomial content_in(const Polynomial& f, std::uint32_t s) {
  Polynomial c(f.ring());
  for (std::uint64_t k = 0; k <= f.degree_in(s); ++k) {
    auto ck = coeff_of_power(f, s, k);
    if (ck.is_zero()) continue;
    c = poly_gcd(c, ck);
    if (c.is_constant()) break;
  }
  return c;
}

Polynomial pseudo_rem(const Polynomial& f, const Polynomial& g, std::uint32_t s) {
  auto dg = g.degree_in(s);
  Polynomial lcg = coeff_of_power(g, s, dg);
  Polynomial r = f;
  while (!r.is_zero()) {
    auto dr = r.degree_in(s);
    if (dr < dg) break;
    Polynomial lcr = coeff_of_power(r, s, dr);
    r = r * lcg - (lcr * g).times_term(Rat(1), Monomial::var(s, static_cast<std::uint32_t>(dr - dg)));
  }
  return r;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.canonical_scaled();
  if (g.is_zero()) return f.canonical_scaled();
  if (f.is_constant() || g.is_constant()) return Polynomial::constant(f.ring(), Rat(1));
  auto s = lowest_symbol(f, g).value();
  if (f.degree_in(s) == 0) return poly_gcd(f, content_in(g, s));
  if (g.degree_in(s) == 0) return poly_gcd(content_in(f, s), g);
  Polynomial cf = content_in(f, s);
  Polynomial cg = content_in(g, s);
  Polynomial pf = exact_divide(f, cf);
  Polynomial pg = exact_divide(g, cg);
  Polynomial c = poly_gcd(cf, cg);
  if (pf.degree_in(s) < pg.degree_in(s)) std::swap(pf, pg);
  while (true) {
    Polynomial r = pseudo_rem(pf, pg, s);
    if (r.is_zero()) return (c * pg).canonical_scaled();
    if (r.degree_in(s) == 0) return c.canonical_scaled();
    pf = std::move(pg);
    pg = exact_divide(r, content_in(r, s));
  }
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw zero_polynomial_error("exact_divide");
  Polynomial r = f;
  Polynomial q(f.ring());
  const auto& glt = g.leading_term();
  std::vector<Term> qts;
  while (!r.is_zero()) {
    auto m = r.leading_term().mono.divide(glt.mono);
    if (!m) throw internal_error("exact_divide: division is not exact");
    Rat c = r.leading_term().coeff / glt.coeff;
    qts.push_back({c, *m});
    r = r - g.times_term(c, *m);
  }
  return Polynomial(f.ring(), std::move(qts));
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw zero_polynomial_error("squarefree_part");
  if (f.is_constant()) return Polynomial::constant(f.ring(), Rat(1));
  std::set<std::uint32_t> support;
  for (const auto& t : f.terms())
    for (const auto& [idx, _] : t.mono.entries()) support.insert(idx);
  Polynomial d = f;
  for (auto idx : support) {
    d = poly_gcd(d, f.derivative(idx));
    if (d.is_constant()) break;
  }
  if (d.is_constant()) return f.canonical_scaled();
  return exact_divide(f, d).canonical_scaled();
}

}  // namespace pgb
