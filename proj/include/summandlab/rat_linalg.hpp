#pragma once

#include <cstddef>
#include <vector>

#include "summandlab/scalar.hpp"

namespace summandlab {

using QMatrix = std::vector<std::vector<Scalar>>;

std::size_t matrix_rank(QMatrix m);

// Congruence diagonalization of a symmetric matrix: returns a basis change C
// (columns are the new basis vectors) and the diagonal entries of C^T A C.
struct SymmetricDiagonalization {
  QMatrix basis;             // n x n, column j is the j-th new basis vector
  std::vector<Scalar> diag;  // entries of the diagonalized form
  std::size_t rank = 0;      // number of nonzero diagonal entries
};

SymmetricDiagonalization diagonalize_symmetric(const QMatrix& a);

}  // namespace summandlab
