#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "pgb/gb.hpp"
#include "pgb/parser.hpp"
#include "pgb/polynomial.hpp"

namespace tu {

using namespace pgb;

inline RingPtr ring_xy_a() { return Ring::make({"x", "y"}, {"a"}); }

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

inline std::vector<Polynomial> PL(const RingPtr& r, const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(P(r, s));
  return out;
}

inline Rat random_rat(std::mt19937_64& rng, long bound = 10) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 4);
  return rat(num(rng), den(rng));
}

inline std::map<std::string, Rat> random_point(std::mt19937_64& rng,
                                               const std::vector<std::string>& symbols,
                                               long bound = 10) {
  std::map<std::string, Rat> pt;
  for (const auto& s : symbols) pt[s] = random_rat(rng, bound);
  return pt;
}

inline Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, int max_terms = 4,
                              std::uint32_t max_exp = 3, long coeff_bound = 6) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> expd(0, max_exp);
  std::vector<Term> ts;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<Monomial::Entry> es;
    for (std::uint32_t s = 0; s < ring->symbol_count(); ++s) {
      auto e = expd(rng);
      if (e > 0 && (rng() & 1)) es.push_back({s, e});
    }
    Rat c = random_rat(rng, coeff_bound);
    if (c != 0) ts.push_back({c, Monomial(std::move(es))});
  }
  return Polynomial(ring, std::move(ts));
}

// Dense reference comparator for order-law cross-checks.
inline int dense_lex_cmp(const Monomial& a, const Monomial& b, std::uint32_t lo, std::uint32_t hi) {
  for (std::uint32_t i = lo; i < hi; ++i) {
    auto ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

inline int dense_grevlex_cmp(const Monomial& a, const Monomial& b, std::uint32_t lo,
                             std::uint32_t hi) {
  auto da = a.degree_in_range(lo, hi), db = b.degree_in_range(lo, hi);
  if (da != db) return da > db ? 1 : -1;
  for (std::uint32_t i = hi; i-- > lo;) {
    auto ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

inline Monomial random_monomial(std::mt19937_64& rng, std::uint32_t nsyms,
                                std::uint32_t max_exp = 4) {
  std::uniform_int_distribution<std::uint32_t> expd(0, max_exp);
  std::vector<Monomial::Entry> es;
  for (std::uint32_t s = 0; s < nsyms; ++s) {
    auto e = expd(rng);
    if (e > 0 && (rng() & 1)) es.push_back({s, e});
  }
  return Monomial(std::move(es));
}

}  // namespace tu
