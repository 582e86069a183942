#pragma once

#include "summandlab/quotient_ring.hpp"

namespace summandlab {

// Homomorphism between finitely presented quotient rings, given by one target
// polynomial per source variable.
class RingMap {
 public:
  RingMap() = default;
  RingMap(QuotientRing source, QuotientRing target, std::vector<Polynomial> images);

  const QuotientRing& source() const { return source_; }
  const QuotientRing& target() const { return target_; }
  const std::vector<Polynomial>& images() const { return images_; }

  // Image of an element of the source ambient ring.
  Polynomial apply(const Polynomial& p) const { return p.substitute(images_); }

  bool is_monomial_map() const;

 private:
  QuotientRing source_;
  QuotientRing target_;
  std::vector<Polynomial> images_;
};

struct WellDefinedRow {
  Polynomial generator;    // source ideal generator
  Polynomial image;        // its substitution into the target ambient
  Polynomial normal_form;  // residue modulo the target ideal (zero iff ok)
};

struct WellDefinedCertificate {
  bool ok = true;
  std::vector<WellDefinedRow> rows;
  // First failing row when not ok.
  const WellDefinedRow* counterexample() const;
};

WellDefinedCertificate check_well_defined(const RingMap& map);

// Preimage of the target ideal, computed by graph-ideal elimination; always
// contains the source ideal.
Ideal kernel(const RingMap& map);

bool is_injective(const RingMap& map);

// Contraction of an ideal of the target along the map.
Ideal preimage_ideal(const RingMap& map, const Ideal& target_ideal);

// Does expanding I to the target and contracting back give I (modulo the
// source ideal)? Returns a witness generator when it does not.
struct ExpandContract {
  bool holds = true;
  Ideal contraction;
  std::optional<Polynomial> witness;
};
ExpandContract expand_contract(const RingMap& map, const Ideal& ideal);

struct ModuleFiniteness {
  bool finite = false;
  std::size_t dimension = 0;          // meaningful when finite
  std::vector<Monomial> basis;        // standard monomials of target/(images)
};

// Graded criterion: target/(images of all source variables) has finite
// vector-space dimension. Requires positive rank-1 gradings on both sides
// with degree-preserving images.
ModuleFiniteness is_module_finite_graded(const RingMap& map);

// Induced map (source/I) -> (target/I*target); throws when the contraction
// hypothesis fails.
RingMap descend_to_quotient(const RingMap& map, const Ideal& ideal);

// psi after phi; phi's target must match psi's source presentation.
RingMap compose(const RingMap& phi, const RingMap& psi);

}  // namespace summandlab
