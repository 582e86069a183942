#include "summandlab/int_linalg.hpp"

#include <algorithm>

namespace summandlab {

namespace {

// Floor division for GMP integers (mpz division truncates toward zero).
Integer floor_div(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void sub_scaled(ZVec& target, const ZVec& src, const Integer& q) {
  for (std::size_t i = 0; i < target.size(); ++i) target[i] -= q * src[i];
}

// Reduces rows r..end against column `col`; afterwards at most the row at
// position r has a nonzero entry in that column. Returns true if it does.
bool clear_column(ZMat& m, std::size_t r, std::size_t col) {
  while (true) {
    std::size_t best = m.size();
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][col] != 0 && (best == m.size() || cmp(abs(m[i][col]), abs(m[best][col])) < 0)) {
        best = i;
      }
    }
    if (best == m.size()) return false;
    std::swap(m[r], m[best]);
    bool again = false;
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][col] != 0) {
        Integer q = floor_div(m[i][col], m[r][col]);
        sub_scaled(m[i], m[r], q);
        if (m[i][col] != 0) again = true;
      }
    }
    if (!again) break;
  }
  if (m[r][col] < 0) {
    for (auto& x : m[r]) x = -x;
  }
  return true;
}

}  // namespace

ZMat hermite_normal_form(ZMat m) {
  if (m.empty()) return m;
  std::size_t cols = m[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    if (!clear_column(m, r, col)) continue;
    pivot_col.push_back(col);
    ++r;
  }
  m.resize(r);
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = r; i-- > 0;) {
    for (std::size_t j = i + 1; j < r; ++j) {
      std::size_t pc = pivot_col[j];
      Integer q = floor_div(m[i][pc], m[j][pc]);
      if (q != 0) sub_scaled(m[i], m[j], q);
    }
  }
  return m;
}

ZMat integer_kernel(const ZMat& m, std::size_t n) {
  std::size_t k = m.size();
  // Augmented rows: (i-th column of m | e_i). Row-reducing the first k
  // columns tracks the unimodular transform in the identity part; rows whose
  // constraint part became zero carry kernel vectors.
  ZMat aug(n, ZVec(k + n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = m[j][i];
    aug[i][k + i] = 1;
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < aug.size(); ++col) {
    if (clear_column(aug, r, col)) ++r;
  }
  ZMat kernel;
  for (std::size_t i = r; i < aug.size(); ++i) {
    kernel.emplace_back(aug[i].begin() + k, aug[i].end());
  }
  return hermite_normal_form(std::move(kernel));
}

bool lattice_contains(const ZMat& hnf, const ZVec& v) {
  ZVec r = lattice_reduce(hnf, v);
  return std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; });
}

ZVec lattice_reduce(const ZMat& hnf, const ZVec& v) {
  ZVec r = v;
  for (const auto& row : hnf) {
    std::size_t pc = 0;
    while (pc < row.size() && row[pc] == 0) ++pc;
    if (pc == row.size()) continue;
    Integer q = floor_div(r[pc], row[pc]);
    if (q != 0) sub_scaled(r, row, q);
  }
  return r;
}

Integer lattice_index(const ZMat& hnf, std::size_t n) {
  if (hnf.size() < n) return 0;
  Integer det(1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pc = 0;
    while (pc < hnf[i].size() && hnf[i][pc] == 0) ++pc;
    if (pc != i) return 0;  // pivots must march down the diagonal for full rank
    det *= hnf[i][pc];
  }
  return det;
}

}  // namespace summandlab
