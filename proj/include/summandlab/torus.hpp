#pragma once

#include "summandlab/grading.hpp"
#include "summandlab/polynomial.hpp"

namespace summandlab {

// Diagonal torus action: the weight matrix columns are the characters of the
// variables.
struct TorusAction {
  MultiGrading weights;

  bool is_invariant(const Monomial& m) const {
    DegreeVector d = weights.degree_of(m);
    for (long x : d) {
      if (x != 0) return false;
    }
    return true;
  }
};

struct InvariantMonomials {
  std::vector<Monomial> monomials;
  int bound = 0;  // enumeration is complete only up to this total degree
};

// All monomials of total degree <= bound with weight zero.
InvariantMonomials invariant_monomials(const TorusAction& action, std::size_t arity, int bound);

// Invariant monomials that are not products of two smaller nonunit invariant
// monomials; complete only up to the bound.
InvariantMonomials monoid_minimal_generators(const TorusAction& action, std::size_t arity,
                                             int bound);

// Action on R[t] where the section variable t carries minus the divisor class.
TorusAction extend_action_section_variable(const TorusAction& action,
                                           const DegreeVector& divisor_class);

// Odd-size skew-symmetric matrix given by its strict upper triangle; the
// lower triangle is the negation, the diagonal is zero.
class SkewMatrix {
 public:
  SkewMatrix(std::size_t size, PolyRing ring);

  std::size_t size() const { return size_; }
  const PolyRing& ring() const { return ring_; }

  // 1-based indices; requires i < j.
  void set_upper(std::size_t i, std::size_t j, Polynomial value);
  // 1-based indices; any i != j (antisymmetry applied), zero on the diagonal.
  Polynomial entry(std::size_t i, std::size_t j) const;

 private:
  std::size_t size_;
  PolyRing ring_;
  std::vector<std::vector<Polynomial>> upper_;
};

// Pfaffian of the 4x4 skew submatrix obtained by deleting the given 1-based
// row and column: M_ab M_cd - M_ac M_bd + M_ad M_bc on the remaining indices.
Polynomial pfaffian(const SkewMatrix& m, std::size_t omit_index);

// Determinant of the same submatrix; equals the Pfaffian squared.
Polynomial submatrix_determinant(const SkewMatrix& m, std::size_t omit_index);

}  // namespace summandlab
