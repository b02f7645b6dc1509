#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgb/gb.hpp"
#include "pgb/idealops.hpp"

namespace pgb {

// Locally closed piece of parameter space: the points where every
// equation vanishes and, for each hole, at least one generator does not.
// All polynomials involve parameters only.
struct Cell {
  std::vector<Polynomial> equations;           // reduced parameter Gröbner basis
  std::vector<std::vector<Polynomial>> holes;  // each entry: generators of one hole ideal

  bool contains(const std::map<std::string, Rat>& point) const;
};

enum class SolutionKind { Inconsistent, UniquePoint, ZeroDimensional, PositiveDimensional };

struct SolutionType {
  SolutionKind kind;
  int value = 0;  // solution bound (ZeroDimensional) or dimension (PositiveDimensional)
  bool operator==(const SolutionType&) const = default;
};

std::string to_string(const SolutionType& st);

// One (region, basis) pair of a Gröbner system. On every point of the
// region the basis specializes to the reduced Gröbner basis of the
// specialized ideal, with leading power products exactly `lpp`.
struct Segment {
  std::vector<Cell> region;
  std::vector<Polynomial> basis;  // content-1, ascending by leading x-monomial
  std::vector<Monomial> lpp;      // ascending; [1] for the inconsistent segment
  SolutionType classification;

  bool basis_is_unit() const {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
  }
  bool basis_is_zero() const { return basis.empty(); }
};

struct GroebnerSystem {
  RingPtr ring;
  std::vector<Polynomial> ideal_generators;  // the discussed parametric ideal
  std::vector<Polynomial> null_constraints;
  std::vector<Polynomial> nonnull_constraints;
  std::vector<Segment> segments;
};

struct CgsOptions {
  Budget* budget = nullptr;
  int max_depth = 64;
};

// Comprehensive Gröbner system of I under the ring's variable/parameter
// split, over V(null) minus the vanishing of any nonnull constraint.
// Branch-and-specialize construction; segments come out in deterministic
// branch order with all basis-[1] cells unified into one segment.
GroebnerSystem compute_cgs(const Ideal& I, const std::vector<Polynomial>& null_constraints = {},
                           const std::vector<Polynomial>& nonnull_constraints = {},
                           const CgsOptions& opts = {});

// Solution type from the leading power products of a reduced basis.
SolutionType classify_segment(const std::vector<Monomial>& lpp, bool basis_is_unit,
                              const RingPtr& ring);

// Best-effort segment merging: structurally identical bases are unioned
// directly; same-lpp segments are additionally merged when a common basis
// over the union can be constructed and verified exactly per cell.
GroebnerSystem merge_segments(const GroebnerSystem& gs, const CgsOptions& opts = {});

// The segment whose region contains a cell over the full constraint
// variety (equations equal to the null-constraint basis).
const Segment& generic_segment(const GroebnerSystem& gs);

// Exact emptiness over an algebraically closed field, via saturation of
// the equation ideal by each choice of hole generators.
bool cell_is_empty(const Cell& cell, const RingPtr& ring, Budget* budget = nullptr);

// Deterministic search for a rational point of the cell; nullopt after the
// attempt budget is inconclusive (the cell may lack rational points).
std::optional<std::map<std::string, Rat>> sample_point(const Cell& cell, const RingPtr& ring,
                                                       std::uint64_t seed, int attempts = 64,
                                                       Budget* budget = nullptr);

// Constructible-set algebra over cells (used for region comparisons).
using Region = std::vector<Cell>;
bool region_contains(const Region& region, const std::map<std::string, Rat>& point);
Region cell_difference(const Cell& a, const Cell& b, const RingPtr& ring, Budget* budget = nullptr);
Region region_difference(const Region& a, const Region& b, const RingPtr& ring,
                         Budget* budget = nullptr);
bool region_symmetric_difference_empty(const Region& a, const Region& b, const RingPtr& ring,
                                       Budget* budget = nullptr);

}  // namespace pgb
