#pragma once

#include <cstddef>
#include <vector>

#include "summandlab/scalar.hpp"

namespace summandlab {

using ZVec = std::vector<Integer>;
using ZMat = std::vector<ZVec>;  // rows

// Row-style Hermite normal form of the lattice spanned by the rows: pivot
// columns strictly increase, pivots are positive, entries above a pivot are
// reduced into [0, pivot). Zero rows are dropped, so the result is a
// canonical basis of the row lattice.
ZMat hermite_normal_form(ZMat m);

// Canonical basis (rows) of { x in Z^n : m x = 0 } for a matrix with n columns.
ZMat integer_kernel(const ZMat& m, std::size_t n);

// Membership in the row lattice of an HNF matrix.
bool lattice_contains(const ZMat& hnf, const ZVec& v);

// Canonical coset representative of v modulo the row lattice (floored
// reduction at each pivot column).
ZVec lattice_reduce(const ZMat& hnf, const ZVec& v);

// Index of the row lattice inside Z^n; 0 when the rank is below n (infinite).
Integer lattice_index(const ZMat& hnf, std::size_t n);

}  // namespace summandlab
