#pragma once

#include <string>
#include <vector>

#include "summandlab/monomial.hpp"

namespace summandlab {

// Total orders on monomials compatible with multiplication. Weight-refined
// orders with a nonnegative weight vector that is positive on a block of
// variables are elimination orders for that block.
class MonomialOrder {
 public:
  enum class Kind { Lex, DegRevLex, BlockElimination, WeightRefined };
  enum class Tiebreak { Lex, DegRevLex };

  static MonomialOrder lex();
  static MonomialOrder degrevlex();
  // Product order: grevlex on the first `first_block_size` variables
  // dominates, then grevlex on the rest.
  static MonomialOrder block_elimination(std::size_t first_block_size);
  static MonomialOrder weight_refined(std::vector<long> weights,
                                      Tiebreak tiebreak = Tiebreak::DegRevLex);
  // Elimination order for an arbitrary variable subset: weight 1 on
  // eliminated variables, 0 elsewhere, grevlex tiebreak.
  static MonomialOrder eliminating(const std::vector<bool>& eliminate);

  Kind kind() const { return kind_; }
  // strictly less
  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

  // Stable identifier used as a cache key component.
  std::string key() const;

  static MonomialOrder parse(const std::string& name);

 private:
  MonomialOrder(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::DegRevLex;
  std::size_t block_size_ = 0;
  std::vector<long> weights_;
  Tiebreak tiebreak_ = Tiebreak::DegRevLex;
};

}  // namespace summandlab
