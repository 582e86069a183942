#pragma once

#include "summandlab/polynomial.hpp"
#include "summandlab/rat_linalg.hpp"

namespace summandlab {

Polynomial derivative(const Polynomial& p, std::size_t var);
std::vector<Polynomial> partial_derivatives(const Polynomial& p);

// Sum of the terms of total degree <= k.
Polynomial jet(const Polynomial& p, int k);
// Homogeneous part of exact total degree k.
Polynomial homogeneous_part(const Polynomial& p, int k);
bool is_homogeneous(const Polynomial& p);

struct HessianAtOrigin {
  QMatrix matrix;  // second partials evaluated at the origin
  std::size_t rank = 0;
  std::size_t corank = 0;
};
HessianAtOrigin hessian_at_origin(const Polynomial& p);

// Dehomogenizes a homogeneous form at chart_var = 1 and translates the given
// point (which must have a nonzero chart coordinate) to the origin. The
// result lives in the ring without the chart variable.
Polynomial chart_localize(const Polynomial& form, const std::string& chart_var,
                          const std::vector<Scalar>& point);

}  // namespace summandlab
