#pragma once

#include "summandlab/ring_map.hpp"

namespace summandlab {

// Dimension of the degree-d piece of the quotient, counted by standard
// monomials up to the given total-degree bound. The bound matters because
// graded pieces can be infinite for non-positive gradings.
std::size_t graded_piece_dimension(const QuotientRing& ring, const MultiGrading& grading,
                                   const DegreeVector& degree, int degree_bound = 12);

// All monomials of total degree <= bound over the given arity, in canonical
// order.
std::vector<Monomial> monomials_up_to_degree(std::size_t arity, int bound);

// All monomials of weighted degree exactly d (positive weights).
std::vector<Monomial> monomials_of_weighted_degree(const std::vector<long>& weights, long d);

struct VeronesePresentation {
  QuotientRing presented;            // k[V1..Vk] / presentation ideal
  RingMap embedding;                 // presented ring -> ambient polynomial ring
  std::vector<Monomial> generators;  // degree-d monomials in the ambient ring
};

// Presentation of the subring generated by all monomials of weighted degree d.
VeronesePresentation veronese_presentation(std::size_t n_vars,
                                           const std::vector<long>& var_weights, long d);

}  // namespace summandlab
