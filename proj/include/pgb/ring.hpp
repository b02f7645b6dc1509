#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pgb/monomial.hpp"

namespace pgb {

enum class OrderTag { Lex, GrevLex };

std::string to_string(OrderTag tag);

// Polynomial ring Q[x][u] with a block (product) term order: any monomial
// containing a variable outranks every parameter-only monomial. Symbols are
// indexed variables-first, parameters after; within each block the order is
// lex or grevlex as declared. Internal extension rings used for elimination
// prepend extra lex blocks of fresh symbols.
class Ring {
 public:
  struct Block {
    std::uint32_t begin, end;
    OrderTag tag;
  };

  static std::shared_ptr<const Ring> make(std::vector<std::string> variables,
                                          std::vector<std::string> parameters,
                                          OrderTag variable_order = OrderTag::Lex,
                                          OrderTag parameter_order = OrderTag::Lex);

  // Ring with `fresh` prepended as a new greatest lex block (used to
  // eliminate the fresh symbols again). Fresh names may use the reserved
  // '@' prefix, which the public parsers reject.
  static std::shared_ptr<const Ring> extend_front(const std::shared_ptr<const Ring>& base,
                                                  const std::vector<std::string>& fresh);

  // Two-block ring with `drop` as the greatest (lex) block and `keep`
  // below it (lex); used for elimination ideals.
  static std::shared_ptr<const Ring> elimination_ring(const std::vector<std::string>& drop,
                                                      const std::vector<std::string>& keep);

  // Same symbols, repartitioned so that exactly `params` are parameters.
  // Relative declaration order of symbols is preserved within each block.
  std::shared_ptr<const Ring> repartition(const std::vector<std::string>& params) const;

  std::uint32_t symbol_count() const { return static_cast<std::uint32_t>(names_.size()); }
  std::uint32_t variable_count() const { return n_vars_; }
  std::uint32_t parameter_count() const { return symbol_count() - n_vars_; }
  bool is_variable(std::uint32_t i) const { return i < n_vars_; }

  const std::string& name(std::uint32_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  std::vector<std::string> variable_names() const;
  std::vector<std::string> parameter_names() const;
  std::optional<std::uint32_t> index_of(const std::string& name) const;

  OrderTag variable_order() const { return var_tag_; }
  OrderTag parameter_order() const { return par_tag_; }

  // Total order on monomials: walks the blocks in priority order.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool same_ring(const Ring& other) const;

 private:
  Ring() = default;

  std::vector<std::string> names_;
  std::uint32_t n_vars_ = 0;
  std::vector<Block> blocks_;
  OrderTag var_tag_ = OrderTag::Lex, par_tag_ = OrderTag::Lex;
  std::unordered_map<std::string, std::uint32_t> index_;

  static std::shared_ptr<const Ring> make_raw(std::vector<std::string> names,
                                              std::uint32_t n_vars, std::vector<Block> blocks,
                                              OrderTag vt, OrderTag pt);
};

using RingPtr = std::shared_ptr<const Ring>;

}  // namespace pgb
