#include "pgb/idealops.hpp"

#include <algorithm>
#include <set>

namespace pgb {

namespace {

const std::string kFresh = "@t0";

std::vector<Polynomial> transport_all(const std::vector<Polynomial>& polys, const RingPtr& target) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.transport(target));
  return out;
}

}  // namespace

Ideal reduced_ideal(const Ideal& I, Budget* budget) {
  return Ideal(I.ring, buchberger(I, budget).elements);
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, Budget* budget) {
  std::set<std::string> drop_set;
  for (const auto& d : drop) {
    if (!I.ring->index_of(d)) throw error("eliminate: unknown symbol " + d);
    drop_set.insert(d);
  }
  std::vector<std::string> drop_ordered, keep;
  for (const auto& nm : I.ring->names())
    (drop_set.count(nm) ? drop_ordered : keep).push_back(nm);
  if (drop_ordered.empty()) return reduced_ideal(I, budget);
  auto elim = Ring::elimination_ring(drop_ordered, keep);
  GroebnerBasis gb = buchberger(elim, transport_all(I.generators, elim), budget);
  std::vector<Polynomial> contraction;
  auto k = static_cast<std::uint32_t>(drop_ordered.size());
  for (const auto& g : gb.elements)
    if (g.supported_in(k, elim->symbol_count())) contraction.push_back(g.transport(I.ring));
  return Ideal(I.ring, buchberger(I.ring, contraction, budget).elements);
}

Ideal saturate(const Ideal& I, const Polynomial& f, Budget* budget) {
  if (f.is_zero()) throw zero_polynomial_error("saturate");
  if (f.is_constant()) return reduced_ideal(I, budget);
  auto ext = Ring::extend_front(I.ring, {kFresh});
  std::vector<Polynomial> gens = transport_all(I.generators, ext);
  Polynomial t = Polynomial::symbol(ext, kFresh);
  gens.push_back(Polynomial::constant(ext, Rat(1)) - t * f.transport(ext));
  GroebnerBasis gb = buchberger(ext, gens, budget);
  std::vector<Polynomial> contraction;
  for (const auto& g : gb.elements)
    if (g.supported_in(1, ext->symbol_count())) contraction.push_back(g.transport(I.ring));
  return Ideal(I.ring, buchberger(I.ring, contraction, budget).elements);
}

Ideal intersect(const Ideal& I, const Ideal& J, Budget* budget) {
  if (!I.ring->same_ring(*J.ring)) throw ring_mismatch();
  if (I.is_zero_ideal() || J.is_zero_ideal()) return Ideal(I.ring, {});
  auto ext = Ring::extend_front(I.ring, {kFresh});
  Polynomial t = Polynomial::symbol(ext, kFresh);
  Polynomial one_minus_t = Polynomial::constant(ext, Rat(1)) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators) gens.push_back(t * g.transport(ext));
  for (const auto& h : J.generators) gens.push_back(one_minus_t * h.transport(ext));
  GroebnerBasis gb = buchberger(ext, gens, budget);
  std::vector<Polynomial> contraction;
  for (const auto& g : gb.elements)
    if (g.supported_in(1, ext->symbol_count())) contraction.push_back(g.transport(I.ring));
  return Ideal(I.ring, buchberger(I.ring, contraction, budget).elements);
}

Ideal saturate_ideal(const Ideal& I, const Ideal& J, Budget* budget) {
  if (J.is_zero_ideal()) throw error("saturate_ideal: zero saturator ideal");
  bool first = true;
  Ideal acc(I.ring, {});
  for (const auto& f : J.generators) {
    Ideal s = saturate(I, f, budget);
    acc = first ? std::move(s) : intersect(acc, s, budget);
    first = false;
  }
  return acc;
}

bool radical_member(const Polynomial& f, const Ideal& I, Budget* budget) {
  if (f.is_zero()) return true;
  auto ext = Ring::extend_front(I.ring, {kFresh});
  std::vector<Polynomial> gens = transport_all(I.generators, ext);
  Polynomial t = Polynomial::symbol(ext, kFresh);
  gens.push_back(Polynomial::constant(ext, Rat(1)) - t * f.transport(ext));
  return buchberger(ext, gens, budget).is_trivial();
}

bool is_trivial(const Ideal& I, Budget* budget) { return buchberger(I, budget).is_trivial(); }

}  // namespace pgb
