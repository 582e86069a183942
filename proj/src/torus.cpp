#include "summandlab/torus.hpp"

#include <algorithm>

#include "summandlab/errors.hpp"
#include "summandlab/graded_rings.hpp"

namespace summandlab {

InvariantMonomials invariant_monomials(const TorusAction& action, std::size_t arity, int bound) {
  if (action.weights.arity() != arity) {
    throw AlgebraError(Errc::ArityMismatch, "action does not match the ring arity");
  }
  InvariantMonomials out;
  out.bound = bound;
  for (const auto& m : monomials_up_to_degree(arity, bound)) {
    if (action.is_invariant(m)) out.monomials.push_back(m);
  }
  return out;
}

InvariantMonomials monoid_minimal_generators(const TorusAction& action, std::size_t arity,
                                             int bound) {
  InvariantMonomials all = invariant_monomials(action, arity, bound);
  InvariantMonomials out;
  out.bound = bound;
  // all.monomials is sorted by degree; a product of two smaller nonunit
  // invariants is detected by subtracting one of them.
  std::vector<Monomial> nonunit;
  for (const auto& m : all.monomials) {
    if (!m.is_one()) nonunit.push_back(m);
  }
  for (const auto& m : nonunit) {
    bool composite = false;
    for (const auto& g : nonunit) {
      if (g.total_degree() >= m.total_degree()) break;
      if (!g.divides(m)) continue;
      Monomial rest = m.divided_by(g);
      if (!rest.is_one() && action.is_invariant(rest)) {
        composite = true;
        break;
      }
    }
    if (!composite) out.monomials.push_back(m);
  }
  return out;
}

TorusAction extend_action_section_variable(const TorusAction& action,
                                           const DegreeVector& divisor_class) {
  if (divisor_class.size() != action.weights.rank()) {
    throw AlgebraError(Errc::ArityMismatch, "divisor class length does not match action rank");
  }
  DegreeVector column(divisor_class.size());
  for (std::size_t i = 0; i < column.size(); ++i) column[i] = -divisor_class[i];
  return TorusAction{action.weights.with_extra_column(column)};
}

SkewMatrix::SkewMatrix(std::size_t size, PolyRing ring)
    : size_(size), ring_(std::move(ring)) {
  if (size_ % 2 == 0) {
    throw AlgebraError(Errc::BadParams, "skew matrix size must be odd");
  }
  upper_.resize(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    upper_[i].assign(size_, Polynomial::zero(ring_));
  }
}

void SkewMatrix::set_upper(std::size_t i, std::size_t j, Polynomial value) {
  if (i < 1 || j <= i || j > size_) {
    throw AlgebraError(Errc::BadIndex, "upper-triangle indices need 1 <= i < j <= size");
  }
  if (value.ring() != ring_) {
    throw AlgebraError(Errc::RingMismatch, "entry lives in a different ring");
  }
  upper_[i - 1][j - 1] = std::move(value);
}

Polynomial SkewMatrix::entry(std::size_t i, std::size_t j) const {
  if (i < 1 || j < 1 || i > size_ || j > size_) {
    throw AlgebraError(Errc::BadIndex, "matrix index out of range");
  }
  if (i == j) return Polynomial::zero(ring_);
  if (i < j) return upper_[i - 1][j - 1];
  return -upper_[j - 1][i - 1];
}

namespace {

std::vector<std::size_t> remaining_indices(const SkewMatrix& m, std::size_t omit_index) {
  if (omit_index < 1 || omit_index > m.size()) {
    throw AlgebraError(Errc::BadIndex, "omitted index out of range");
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 1; i <= m.size(); ++i) {
    if (i != omit_index) keep.push_back(i);
  }
  if (keep.size() != 4) {
    throw AlgebraError(Errc::BadParams, "Pfaffian is implemented for 5x5 matrices");
  }
  return keep;
}

}  // namespace

Polynomial pfaffian(const SkewMatrix& m, std::size_t omit_index) {
  auto keep = remaining_indices(m, omit_index);
  std::size_t a = keep[0], b = keep[1], c = keep[2], d = keep[3];
  return m.entry(a, b) * m.entry(c, d) - m.entry(a, c) * m.entry(b, d) +
         m.entry(a, d) * m.entry(b, c);
}

Polynomial submatrix_determinant(const SkewMatrix& m, std::size_t omit_index) {
  auto keep = remaining_indices(m, omit_index);
  // Laplace expansion along the first row of the 4x4 submatrix.
  auto minor3 = [&](std::size_t skip_col) {
    std::vector<std::size_t> rows(keep.begin() + 1, keep.end());
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < 4; ++j) {
      if (j != skip_col) cols.push_back(keep[j]);
    }
    Polynomial det = Polynomial::zero(m.ring());
    // 3x3 determinant by direct expansion.
    std::size_t perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int sign_of[6] = {1, -1, -1, 1, 1, -1};
    for (int p = 0; p < 6; ++p) {
      Polynomial prod = Polynomial::constant(m.ring(), Scalar(sign_of[p]));
      for (std::size_t r = 0; r < 3; ++r) prod = prod * m.entry(rows[r], cols[perms[p][r]]);
      det = det + prod;
    }
    return det;
  };
  Polynomial det = Polynomial::zero(m.ring());
  for (std::size_t j = 0; j < 4; ++j) {
    Polynomial cofactor = minor3(j);
    Polynomial term = m.entry(keep[0], keep[j]) * cofactor;
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace summandlab
