#pragma once

#include <optional>

#include "summandlab/ring_map.hpp"
#include "summandlab/torus.hpp"

namespace summandlab {

// A named construction exposed to tests and the CLI. Keys are stable public
// identifiers: quadric(n), segre, veronese2, xnd(n,d), weyl(c), dp5cox,
// dp4a, dp4b, cubic3A2, cubicA1A5, cubicE6.
struct NamedExample {
  std::string key;
  std::string description;
  std::optional<QuotientRing> ring;
  std::optional<RingMap> map;
  std::optional<SkewMatrix> matrix;
  std::optional<MultiGrading> grading;  // divisor-class weights where applicable
  std::vector<std::pair<std::string, Polynomial>> named_polynomials;
};

NamedExample build_named_example(const std::string& key, const std::vector<long>& params = {});

std::vector<std::string> catalog_keys();

// Expands Delta_1 p_1 - Delta_2 p_2 + ... +- Delta_{c+1} p_{c+1} for a
// generic c x (c+1) matrix and inner products against (v_1..v_c); the sum
// collapses to zero as the expansion of a determinant with a repeated row.
struct WeylRelation {
  bool is_zero = false;
  Polynomial expanded;           // the alternating sum after cancellation
  std::size_t term_instances = 0;  // monomial instances before cancellation
};
WeylRelation verify_weyl_relation(long c);

// Rank of the symmetric coefficient matrix of a quadratic form.
std::size_t quadric_rank(const Polynomial& q);

}  // namespace summandlab
