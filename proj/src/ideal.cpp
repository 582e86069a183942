#include "summandlab/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "summandlab/errors.hpp"

namespace summandlab {

Ideal::Ideal(PolyRing ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (g.ring() != ring_) {
      throw AlgebraError(Errc::RingMismatch, "ideal generator lives in a different ring");
    }
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

Ideal Ideal::plus(const Ideal& other) const {
  if (other.ring_ != ring_) {
    throw AlgebraError(Errc::RingMismatch, "ideal sum across different rings");
  }
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::plus(const Polynomial& g) const {
  std::vector<Polynomial> gens = generators_;
  gens.push_back(g);
  return Ideal(ring_, std::move(gens));
}

std::string Ideal::canonical_key() const {
  std::vector<std::string> parts;
  parts.reserve(generators_.size());
  for (const auto& g : generators_) parts.push_back(g.to_string());
  std::sort(parts.begin(), parts.end());
  std::ostringstream out;
  for (const auto& v : ring_.variables()) out << v << ",";
  out << "|";
  for (const auto& p : parts) out << p << ";";
  return out.str();
}

}  // namespace summandlab
