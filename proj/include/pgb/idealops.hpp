#pragma once

#include <string>
#include <vector>

#include "pgb/gb.hpp"

namespace pgb {

// Ideal-theoretic toolkit. Every operation returns its result as the
// reduced Gröbner basis in the ideal's own ring, so equality of results
// is structural equality of generator lists.

// Contraction I ∩ Q[remaining symbols], via a block order with the
// dropped symbols greatest.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, Budget* budget = nullptr);

// Saturation I : f^∞ (fresh symbol t, relation 1 - t*f, eliminate t).
Ideal saturate(const Ideal& I, const Polynomial& f, Budget* budget = nullptr);

// I : J^∞ computed generator-wise: intersection of I : f^∞ over the
// generators f of J.
Ideal saturate_ideal(const Ideal& I, const Ideal& J, Budget* budget = nullptr);

Ideal intersect(const Ideal& I, const Ideal& J, Budget* budget = nullptr);

// True iff f vanishes on V(I): 1 ∈ I + (1 - t*f).
bool radical_member(const Polynomial& f, const Ideal& I, Budget* budget = nullptr);

// True iff the reduced basis is [1].
bool is_trivial(const Ideal& I, Budget* budget = nullptr);

// Reduced Gröbner basis of I as an Ideal in the same ring.
Ideal reduced_ideal(const Ideal& I, Budget* budget = nullptr);

}  // namespace pgb
