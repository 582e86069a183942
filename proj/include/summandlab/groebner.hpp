#pragma once

#include <memory>
#include <vector>

#include "summandlab/ideal.hpp"
#include "summandlab/monomial_order.hpp"

namespace summandlab {

// Resource guard for basis computations; read once from the environment.
// SUMMANDLAB_GB_BUDGET overrides the S-pair cap.
struct GbBudget {
  long max_spairs = 200000;
  long max_terms = 2000000;
  static GbBudget from_env();
};

class GroebnerBasis {
 public:
  GroebnerBasis(Ideal ideal, MonomialOrder order, std::vector<Polynomial> basis);

  const Ideal& ideal() const { return ideal_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Polynomial>& basis() const { return basis_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  bool is_unit_ideal() const;

 private:
  Ideal ideal_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
  std::vector<Monomial> leads_;
};

using GroebnerBasisPtr = std::shared_ptr<const GroebnerBasis>;

// The unique reduced basis of (ideal, order); results are cached per process,
// keyed by the canonical generator fingerprint and the order key.
GroebnerBasisPtr reduced_groebner(const Ideal& ideal, const MonomialOrder& order);

// Unique remainder: no term of the result is divisible by a leading monomial.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool contains(const Polynomial& p, const Ideal& ideal);
bool ideal_contains(const Ideal& larger, const Ideal& smaller);
bool ideal_equals(const Ideal& a, const Ideal& b);

// Leading term of p under the order; p must be nonzero.
std::pair<Monomial, Scalar> leading_term(const Polynomial& p, const MonomialOrder& order);

// Intersection of I with the subring generated by the kept variables; the
// result is expressed in the original ring.
Ideal eliminate(const Ideal& ideal, const std::vector<std::string>& keep);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon_ideal(const Ideal& ideal, const Ideal& divisor);
Ideal saturate(const Ideal& ideal, const Ideal& divisor);

bool is_zero_dimensional(const Ideal& ideal);
// Count of standard monomials; throws NotZeroDimensional otherwise.
std::size_t zero_dim_vector_dimension(const Ideal& ideal);
// Standard monomials of a zero-dimensional ideal (the residue vector-space basis).
std::vector<Monomial> standard_monomials(const Ideal& ideal);

struct RationalPoints {
  std::vector<std::vector<Scalar>> points;
  // True when the rational points account for the whole residue algebra
  // (sum of local multiplicities equals its vector-space dimension).
  bool complete = true;
};
RationalPoints rational_points_zero_dim(const Ideal& ideal);

// Post-hoc Buchberger certificate: every S-polynomial of the basis reduces
// to zero. Used by tests.
bool buchberger_certificate(const GroebnerBasis& gb);

}  // namespace summandlab
