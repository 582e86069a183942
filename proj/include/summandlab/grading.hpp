#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "summandlab/ideal.hpp"
#include "summandlab/polynomial.hpp"

namespace summandlab {

using DegreeVector = std::vector<long>;

std::string to_string(const DegreeVector& d);

// Integer weight matrix: one row per grading component, one column per ring
// variable.
class MultiGrading {
 public:
  MultiGrading() = default;
  explicit MultiGrading(std::vector<std::vector<long>> rows);

  static MultiGrading standard(std::size_t arity) {
    return MultiGrading({std::vector<long>(arity, 1)});
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t arity() const { return rows_.empty() ? 0 : rows_[0].size(); }
  const std::vector<std::vector<long>>& rows() const { return rows_; }

  DegreeVector degree_of(const Monomial& m) const;

  // Grading on a ring with one extra trailing variable carrying the given
  // column.
  MultiGrading with_extra_column(const DegreeVector& column) const;

  bool operator==(const MultiGrading& other) const { return rows_ == other.rows_; }

 private:
  std::vector<std::vector<long>> rows_;
};

struct HomogeneityCheck {
  std::optional<DegreeVector> degree;  // engaged iff homogeneous
  // Two terms of distinct degree, when inhomogeneous.
  std::optional<std::pair<Monomial, Monomial>> witness;
  bool homogeneous() const { return degree.has_value(); }
};

// Common degree of all terms, or a witness pair. The zero polynomial is
// homogeneous of degree zero.
HomogeneityCheck homogeneous_degree(const Polynomial& p, const MultiGrading& grading);

bool all_generators_homogeneous(const Ideal& ideal, const MultiGrading& grading);

// Hermite-form basis of the lattice of weight rows making every generator
// homogeneous; at most max_rank rows are returned.
MultiGrading discover_grading(const Ideal& ideal, std::size_t max_rank);

}  // namespace summandlab
