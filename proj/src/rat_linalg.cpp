#include "summandlab/rat_linalg.hpp"

#include <algorithm>

#include "summandlab/errors.hpp"

namespace summandlab {

std::size_t matrix_rank(QMatrix m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size();
  std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && m[r][col] != 0) {
        Scalar factor = m[r][col] / m[rank][col];
        for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

SymmetricDiagonalization diagonalize_symmetric(const QMatrix& input) {
  std::size_t n = input.size();
  QMatrix a = input;
  for (const auto& row : a) {
    if (row.size() != n) throw AlgebraError(Errc::BadParams, "matrix is not square");
  }
  // c tracks the accumulated change of basis; congruence steps apply the same
  // elementary operation to rows and columns of a, and to columns of c.
  QMatrix c(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 1;

  auto add_col = [&](std::size_t dst, std::size_t src, const Scalar& t) {
    // column dst += t * column src (and symmetric row operation on a)
    for (std::size_t r = 0; r < n; ++r) a[r][dst] += t * a[r][src];
    for (std::size_t cc = 0; cc < n; ++cc) a[dst][cc] += t * a[src][cc];
    for (std::size_t r = 0; r < n; ++r) c[r][dst] += t * c[r][src];
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t cc = 0; cc < n; ++cc) std::swap(a[i][cc], a[j][cc]);
    for (std::size_t r = 0; r < n; ++r) std::swap(c[r][i], c[r][j]);
  };

  std::size_t k = 0;
  while (k < n) {
    if (a[k][k] == 0) {
      // Prefer a later index with nonzero diagonal.
      std::size_t j = k + 1;
      while (j < n && a[j][j] == 0) ++j;
      if (j < n) {
        swap_cols(k, j);
      } else {
        // All remaining diagonal entries vanish; pull in an off-diagonal one.
        std::size_t r = k, s = k;
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i) {
          for (std::size_t j2 = i + 1; j2 < n && !found; ++j2) {
            if (a[i][j2] != 0) {
              r = i;
              s = j2;
              found = true;
            }
          }
        }
        if (!found) break;  // remaining block is zero
        add_col(r, s, Scalar(1));  // makes a[r][r] = 2*a[r][s] != 0
        if (r != k) swap_cols(k, r);
      }
    }
    Scalar pivot = a[k][k];
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a[k][j] != 0) add_col(j, k, -a[k][j] / pivot);
    }
    ++k;
  }

  SymmetricDiagonalization out;
  out.basis = c;
  out.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.diag[i] = a[i][i];
    if (a[i][i] != 0) ++out.rank;
  }
  return out;
}

}  // namespace summandlab
