#include "pgb/ring.hpp"

#include <algorithm>
#include <set>

#include "pgb/error.hpp"

namespace pgb {

std::string to_string(OrderTag tag) { return tag == OrderTag::Lex ? "lex" : "grevlex"; }

std::shared_ptr<const Ring> Ring::make_raw(std::vector<std::string> names, std::uint32_t n_vars,
                                           std::vector<Block> blocks, OrderTag vt, OrderTag pt) {
  auto ring = std::shared_ptr<Ring>(new Ring());
  ring->names_ = std::move(names);
  ring->n_vars_ = n_vars;
  ring->blocks_ = std::move(blocks);
  ring->var_tag_ = vt;
  ring->par_tag_ = pt;
  for (std::uint32_t i = 0; i < ring->names_.size(); ++i) {
    const auto& nm = ring->names_[i];
    if (nm.empty()) throw error("empty symbol name");
    if (!ring->index_.emplace(nm, i).second) throw error("duplicate symbol name: " + nm);
  }
  return ring;
}

std::shared_ptr<const Ring> Ring::make(std::vector<std::string> variables,
                                       std::vector<std::string> parameters, OrderTag vt,
                                       OrderTag pt) {
  auto n_vars = static_cast<std::uint32_t>(variables.size());
  auto total = n_vars + static_cast<std::uint32_t>(parameters.size());
  std::vector<std::string> names = std::move(variables);
  names.insert(names.end(), parameters.begin(), parameters.end());
  std::vector<Block> blocks;
  if (n_vars > 0) blocks.push_back({0, n_vars, vt});
  if (total > n_vars) blocks.push_back({n_vars, total, pt});
  return make_raw(std::move(names), n_vars, std::move(blocks), vt, pt);
}

std::shared_ptr<const Ring> Ring::extend_front(const std::shared_ptr<const Ring>& base,
                                               const std::vector<std::string>& fresh) {
  auto k = static_cast<std::uint32_t>(fresh.size());
  std::vector<std::string> names = fresh;
  names.insert(names.end(), base->names_.begin(), base->names_.end());
  std::vector<Block> blocks;
  blocks.push_back({0, k, OrderTag::Lex});
  for (const auto& b : base->blocks_) blocks.push_back({b.begin + k, b.end + k, b.tag});
  return make_raw(std::move(names), base->n_vars_ + k, std::move(blocks), base->var_tag_,
                  base->par_tag_);
}

std::shared_ptr<const Ring> Ring::elimination_ring(const std::vector<std::string>& drop,
                                                   const std::vector<std::string>& keep) {
  auto k = static_cast<std::uint32_t>(drop.size());
  auto total = k + static_cast<std::uint32_t>(keep.size());
  std::vector<std::string> names = drop;
  names.insert(names.end(), keep.begin(), keep.end());
  std::vector<Block> blocks;
  if (k > 0) blocks.push_back({0, k, OrderTag::Lex});
  if (total > k) blocks.push_back({k, total, OrderTag::Lex});
  return make_raw(std::move(names), k, std::move(blocks), OrderTag::Lex, OrderTag::Lex);
}

std::shared_ptr<const Ring> Ring::repartition(const std::vector<std::string>& params) const {
  std::set<std::string> pset(params.begin(), params.end());
  for (const auto& p : params)
    if (!index_of(p)) throw error("repartition: unknown symbol " + p);
  std::vector<std::string> vars, pars;
  for (const auto& nm : names_)
    (pset.count(nm) ? pars : vars).push_back(nm);
  return make(std::move(vars), std::move(pars), var_tag_, par_tag_);
}

std::vector<std::string> Ring::variable_names() const {
  return {names_.begin(), names_.begin() + n_vars_};
}

std::vector<std::string> Ring::parameter_names() const {
  return {names_.begin() + n_vars_, names_.end()};
}

std::optional<std::uint32_t> Ring::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Lex within [lo, hi): first differing exponent decides, earlier symbols first.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b, std::uint32_t lo,
                                 std::uint32_t hi) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto i = ea.begin(), j = eb.begin();
  while (i != ea.end() && (i->first < lo || i->first >= hi)) ++i;
  while (j != eb.end() && (j->first < lo || j->first >= hi)) ++j;
  while (i != ea.end() && j != eb.end()) {
    if (i->first >= hi && j->first >= hi) break;
    if (i->first != j->first) {
      // The one with a positive exponent at the earlier symbol is larger.
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (i->second != j->second)
      return i->second > j->second ? std::strong_ordering::greater : std::strong_ordering::less;
    do ++i;
    while (i != ea.end() && (i->first < lo || i->first >= hi));
    do ++j;
    while (j != eb.end() && (j->first < lo || j->first >= hi));
  }
  bool ra = false, rb = false;
  for (; i != ea.end(); ++i)
    if (i->first >= lo && i->first < hi) {
      ra = true;
      break;
    }
  for (; j != eb.end(); ++j)
    if (j->first >= lo && j->first < hi) {
      rb = true;
      break;
    }
  if (ra == rb) return std::strong_ordering::equal;
  return ra ? std::strong_ordering::greater : std::strong_ordering::less;
}

// Graded reverse lex within [lo, hi).
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b, std::uint32_t lo,
                                     std::uint32_t hi) {
  auto da = a.degree_in_range(lo, hi);
  auto db = b.degree_in_range(lo, hi);
  if (da != db) return da > db ? std::strong_ordering::greater : std::strong_ordering::less;
  // Same degree: the last symbol where exponents differ decides, the
  // SMALLER exponent there wins.
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  auto i = ea.rbegin(), j = eb.rbegin();
  while (i != ea.rend() && (i->first < lo || i->first >= hi)) ++i;
  while (j != eb.rend() && (j->first < lo || j->first >= hi)) ++j;
  while (i != ea.rend() && j != eb.rend()) {
    if (i->first != j->first) {
      // Larger index present means positive exponent at a later symbol.
      return i->first > j->first ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (i->second != j->second)
      return i->second > j->second ? std::strong_ordering::less : std::strong_ordering::greater;
    do ++i;
    while (i != ea.rend() && (i->first < lo || i->first >= hi));
    do ++j;
    while (j != eb.rend() && (j->first < lo || j->first >= hi));
  }
  // Equal degree and one exhausted: both must exhaust simultaneously.
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering Ring::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& blk : blocks_) {
    auto c = blk.tag == OrderTag::Lex ? lex_compare(a, b, blk.begin, blk.end)
                                      : grevlex_compare(a, b, blk.begin, blk.end);
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool Ring::same_ring(const Ring& other) const {
  if (this == &other) return true;
  return names_ == other.names_ && n_vars_ == other.n_vars_ && var_tag_ == other.var_tag_ &&
         par_tag_ == other.par_tag_;
}

}  // namespace pgb
