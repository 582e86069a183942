#pragma once

#include <string>
#include <vector>

#include "summandlab/polynomial.hpp"

namespace summandlab {

class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(PolyRing ring) : ring_(std::move(ring)) {}
  Ideal(PolyRing ring, std::vector<Polynomial> generators);

  static Ideal zero(const PolyRing& ring) { return Ideal(ring); }
  static Ideal unit(const PolyRing& ring) {
    return Ideal(ring, {Polynomial::constant(ring, Scalar(1))});
  }

  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero_ideal() const { return generators_.empty(); }

  Ideal plus(const Ideal& other) const;
  Ideal plus(const Polynomial& g) const;

  // Deterministic fingerprint of (ring, sorted generators); cache key material.
  std::string canonical_key() const;

 private:
  PolyRing ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace summandlab
