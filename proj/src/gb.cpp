#include "pgb/gb.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pgb {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> gens) : ring(std::move(r)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->same_ring(*ring)) throw ring_mismatch();
    generators.push_back(std::move(g));
  }
}

void Budget::spend() {
  if (pairs_left == 0) throw budget_exceeded("pair budget exhausted");
  --pairs_left;
}

NormalFormResult normal_form_ex(const Polynomial& f, const std::vector<Polynomial>& G,
                                bool record_cofactors) {
  for (const auto& g : G)
    if (g.is_zero()) throw zero_polynomial_error("normal_form divisor");
  NormalFormResult res{Polynomial::zero(f.ring()), {}};
  if (record_cofactors) res.cofactors.assign(G.size(), Polynomial::zero(f.ring()));
  Polynomial rest = f;
  std::vector<Term> remainder_terms;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    bool divided = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      auto q = lt.mono.divide(G[i].leading_monomial());
      if (!q) continue;
      Rat c = lt.coeff / G[i].leading_coeff_rat();
      rest = rest - G[i].times_term(c, *q);
      if (record_cofactors)
        res.cofactors[i] = res.cofactors[i] + Polynomial::from_monomial(f.ring(), c, *q);
      divided = true;
      break;
    }
    if (!divided) {
      remainder_terms.push_back(lt);
      rest = rest - Polynomial::from_monomial(f.ring(), lt.coeff, lt.mono);
    }
  }
  res.remainder = Polynomial(f.ring(), std::move(remainder_terms));
  return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  return normal_form_ex(f, G, false).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw zero_polynomial_error("s_polynomial");
  const auto& lf = f.leading_term();
  const auto& lg = g.leading_term();
  Monomial L = lcm(lf.mono, lg.mono);
  return f.times_term(Rat(1) / lf.coeff, L.divide(lf.mono).value()) -
         g.times_term(Rat(1) / lg.coeff, L.divide(lg.mono).value());
}

namespace {

// Drops elements whose leading monomial is divisible by another's, then
// fully reduces each element against the rest: the unique reduced basis.
std::vector<Polynomial> reduce_basis(const RingPtr& ring, std::vector<Polynomial> G) {
  std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  std::vector<Polynomial> minimal;
  for (auto& g : G) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (g.leading_monomial().divisible_by(m.leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(g));
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = others.empty() ? minimal[i] : normal_form(minimal[i], others);
    if (!r.is_zero()) out.push_back(r.canonical_scaled());
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return out;
}

// Mutual reduction that preserves the generated ideal (no minimality
// assumption on the input, unlike reduce_basis).
std::vector<Polynomial> interreduce_input(std::vector<Polynomial> G) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < G.size(); ++j)
        if (j != i) others.push_back(G[j]);
      if (others.empty()) break;
      Polynomial r = normal_form(G[i], others);
      if (r.is_zero()) {
        G.erase(G.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
      r = r.canonical_scaled();
      if (!(r == G[i])) {
        G[i] = std::move(r);
        changed = true;
        break;
      }
    }
  }
  return G;
}

struct Pair {
  std::uint64_t lcm_degree;
  Monomial lcm_mono;
  std::size_t i, j;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens,
                         Budget* budget) {
  std::vector<Polynomial> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(g.canonical_scaled());
  // Interreduce the input first; keeps pair counts small.
  G = interreduce_input(std::move(G));
  if (G.empty()) return {ring, {}, true};

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    auto c = ring->compare(a.lcm_mono, b.lcm_mono);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial L = lcm(G[i].leading_monomial(), G[j].leading_monomial());
      queue.push_back({L.degree(), L, i, j});
    }
  };
  for (std::size_t j = 1; j < G.size(); ++j) push_pairs(j);
  std::set<std::pair<std::size_t, std::size_t>> done;

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_less);
    Pair p = *it;
    queue.erase(it);
    done.insert({p.i, p.j});
    if (budget) budget->spend();
    const auto& lmi = G[p.i].leading_monomial();
    const auto& lmj = G[p.j].leading_monomial();
    // First criterion: coprime leading monomials.
    if (lmi.coprime_with(lmj)) continue;
    // Chain criterion: some k with LM(k) | lcm(i,j) and both mixed pairs done.
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!p.lcm_mono.divisible_by(G[k].leading_monomial())) continue;
      auto key = [&](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done.count(key(p.i, k)) && done.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;
    Polynomial h = normal_form(s_polynomial(G[p.i], G[p.j]), G);
    if (h.is_zero()) continue;
    G.push_back(h.canonical_scaled());
    if (h.is_constant()) break;  // unit ideal; basis collapses to [1]
    push_pairs(G.size() - 1);
  }

  for (const auto& g : G)
    if (g.is_constant())
      return {ring, {Polynomial::constant(ring, Rat(1))}, true};
  return {ring, reduce_basis(ring, std::move(G)), true};
}

GroebnerBasis buchberger(const Ideal& ideal, Budget* budget) {
  return buchberger(ideal.ring, ideal.generators, budget);
}

std::vector<std::uint32_t> max_independent_set(const std::vector<Monomial>& lms, std::uint32_t lo,
                                               std::uint32_t hi) {
  std::uint32_t n = hi - lo;
  std::uint64_t best_mask = 0;
  int best_count = -1;
  std::uint64_t best_sum = 0;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    bool ok = true;
    for (const auto& m : lms) {
      bool inside = true;
      for (const auto& [idx, _] : m.entries()) {
        if (idx < lo || idx >= hi || !((mask >> (idx - lo)) & 1)) {
          inside = false;
          break;
        }
      }
      if (inside) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    int count = 0;
    std::uint64_t sum = 0;
    for (std::uint32_t b = 0; b < n; ++b)
      if ((mask >> b) & 1) {
        ++count;
        sum += b;
      }
    // Prefer larger sets; on ties prefer later symbols (parameters).
    if (count > best_count || (count == best_count && sum > best_sum)) {
      best_count = count;
      best_sum = sum;
      best_mask = mask;
    }
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t b = 0; b < n; ++b)
    if ((best_mask >> b) & 1) out.push_back(lo + b);
  return out;
}

DimensionResult dimension(const Ideal& ideal, Budget* budget) {
  GroebnerBasis gb = buchberger(ideal, budget);
  if (gb.is_trivial()) throw unit_ideal_error();
  std::vector<Monomial> lms;
  for (const auto& g : gb.elements) lms.push_back(g.leading_monomial());
  auto witness = max_independent_set(lms, 0, ideal.ring->symbol_count());
  DimensionResult res;
  res.dim = static_cast<int>(witness.size());
  for (auto idx : witness) res.witness.push_back(ideal.ring->name(idx));
  return res;
}

}  // namespace pgb
