#include <doctest.h>

#include <random>

#include "summandlab/int_linalg.hpp"
#include "summandlab/rat_linalg.hpp"

using namespace summandlab;

namespace {

ZMat zmat(const std::vector<std::vector<long>>& rows) {
  ZMat m;
  for (const auto& row : rows) {
    ZVec r;
    for (long x : row) r.emplace_back(x);
    m.push_back(std::move(r));
  }
  return m;
}

ZVec zvec(const std::vector<long>& row) {
  ZVec r;
  for (long x : row) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("hermite normal form basics") {
  ZMat h = hermite_normal_form(zmat({{2, 0}, {1, 1}}));
  REQUIRE(h.size() == 2);
  CHECK(h[0] == zvec({1, 1}));
  CHECK(h[1] == zvec({0, 2}));

  // Lattice membership: a + b even.
  ZMat lattice = hermite_normal_form(zmat({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(lattice_contains(lattice, zvec({4, 2})));
  CHECK(lattice_contains(lattice, zvec({1, 1})));
  CHECK(!lattice_contains(lattice, zvec({1, 0})));
  CHECK(lattice_index(lattice, 2) == 2);
}

TEST_CASE("kernel of an integer matrix") {
  // Kernel of (1,-1,-1,1): rank 3 and contains the expected weight rows.
  ZMat k = integer_kernel(zmat({{1, -1, -1, 1}}), 4);
  CHECK(k.size() == 3);
  ZMat khnf = hermite_normal_form(k);
  CHECK(lattice_contains(khnf, zvec({1, 1, 1, 1})));
  CHECK(lattice_contains(khnf, zvec({1, 0, 1, 0})));
  CHECK(!lattice_contains(khnf, zvec({1, 0, 0, 0})));

  // 2a = 3b: kernel generated by (3,2).
  ZMat k2 = integer_kernel(zmat({{2, -3}}), 2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == zvec({3, 2}));

  // No constraints: the whole of Z^3.
  ZMat k3 = integer_kernel(ZMat{}, 3);
  CHECK(k3.size() == 3);
  CHECK(lattice_index(hermite_normal_form(k3), 3) == 1);
}

TEST_CASE("kernel vectors always annihilate the matrix") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<long> entry(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t rows = 1 + rng() % 3;
    std::size_t cols = 2 + rng() % 4;
    ZMat m(rows, ZVec(cols));
    for (auto& row : m) {
      for (auto& x : row) x = entry(rng);
    }
    for (const auto& v : integer_kernel(m, cols)) {
      for (const auto& row : m) {
        Integer dot(0);
        for (std::size_t j = 0; j < cols; ++j) dot += row[j] * v[j];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("lattice index via HNF matches the determinant") {
  // X(3,3) exponent lattice: index 9 in Z^3.
  ZMat lattice = hermite_normal_form(zmat({{1, 1, 1}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
  CHECK(lattice_index(lattice, 3) == 9);
  // Veronese lattice: index 2.
  ZMat ver = hermite_normal_form(zmat({{2, 0}, {1, 1}, {0, 2}}));
  CHECK(lattice_index(ver, 2) == 2);
  // Rank-deficient: infinite index.
  ZMat thin = hermite_normal_form(zmat({{1, 2, 3}}));
  CHECK(lattice_index(thin, 3) == 0);
}

TEST_CASE("rational rank and symmetric diagonalization") {
  QMatrix m = {{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}};
  CHECK(matrix_rank(m) == 1);

  // Hyperbolic plane: zero diagonal, off-diagonal 1.
  QMatrix h = {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}};
  auto diag = diagonalize_symmetric(h);
  CHECK(diag.rank == 2);

  std::mt19937 rng(55);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 3;
    QMatrix a(n, std::vector<Scalar>(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        a[i][j] = Scalar(entry(rng));
        a[j][i] = a[i][j];
      }
    }
    auto d = diagonalize_symmetric(a);
    CHECK(d.rank == matrix_rank(a));
    // Verify C^T A C is the reported diagonal.
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        Scalar value(0);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            value += d.basis[i][p] * a[i][j] * d.basis[j][q];
          }
        }
        CHECK(value == (p == q ? d.diag[p] : Scalar(0)));
      }
    }
  }
}
