#pragma once

#include <optional>

#include "summandlab/grading.hpp"
#include "summandlab/groebner.hpp"
#include "summandlab/ideal.hpp"

namespace summandlab {

// Finitely presented quotient of a polynomial ring, optionally multigraded.
class QuotientRing {
 public:
  QuotientRing() = default;
  explicit QuotientRing(PolyRing ambient)
      : ambient_(ambient), ideal_(Ideal::zero(ambient)) {}
  QuotientRing(PolyRing ambient, Ideal ideal,
               std::optional<MultiGrading> grading = std::nullopt);

  static QuotientRing free(const PolyRing& ring) { return QuotientRing(ring); }

  const PolyRing& ambient() const { return ambient_; }
  const Ideal& ideal() const { return ideal_; }
  const std::optional<MultiGrading>& grading() const { return grading_; }
  bool has_trivial_ideal() const { return ideal_.is_zero_ideal(); }

  // Canonical representative modulo the defining ideal.
  Polynomial reduce(const Polynomial& p) const;
  bool same_class(const Polynomial& a, const Polynomial& b) const;
  bool is_zero_class(const Polynomial& p) const { return reduce(p).is_zero(); }

  bool same_presentation(const QuotientRing& other) const;

 private:
  PolyRing ambient_;
  Ideal ideal_;
  std::optional<MultiGrading> grading_;
};

}  // namespace summandlab
