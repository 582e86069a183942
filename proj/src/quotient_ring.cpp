#include "summandlab/quotient_ring.hpp"

#include "summandlab/errors.hpp"

namespace summandlab {

QuotientRing::QuotientRing(PolyRing ambient, Ideal ideal, std::optional<MultiGrading> grading)
    : ambient_(std::move(ambient)), ideal_(std::move(ideal)), grading_(std::move(grading)) {
  if (ideal_.ring() != ambient_) {
    throw AlgebraError(Errc::RingMismatch, "defining ideal lives in a different ring");
  }
  if (grading_ && !all_generators_homogeneous(ideal_, *grading_)) {
    throw AlgebraError(Errc::InhomogeneousIdeal,
                       "defining ideal is not homogeneous for the given grading");
  }
}

Polynomial QuotientRing::reduce(const Polynomial& p) const {
  if (ideal_.is_zero_ideal()) return p;
  return normal_form(p, *reduced_groebner(ideal_, MonomialOrder::degrevlex()));
}

bool QuotientRing::same_class(const Polynomial& a, const Polynomial& b) const {
  return reduce(a - b).is_zero();
}

bool QuotientRing::same_presentation(const QuotientRing& other) const {
  return ambient_ == other.ambient_ && ideal_equals(ideal_, other.ideal_);
}

}  // namespace summandlab
