#include "summandlab/poly_ring.hpp"

#include <set>

#include "summandlab/errors.hpp"

namespace summandlab {

PolyRing::PolyRing(std::vector<std::string> variables) : variables_(std::move(variables)) {
  std::set<std::string> seen;
  for (const auto& name : variables_) {
    if (name.empty()) {
      throw AlgebraError(Errc::BadParams, "empty variable name");
    }
    if (!seen.insert(name).second) {
      throw AlgebraError(Errc::BadParams, "duplicate variable name: " + name);
    }
  }
}

std::optional<std::size_t> PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i] == name) return i;
  }
  return std::nullopt;
}

PolyRing PolyRing::without_variable(std::size_t drop) const {
  std::vector<std::string> names;
  names.reserve(variables_.size() - 1);
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i != drop) names.push_back(variables_[i]);
  }
  return PolyRing(std::move(names));
}

PolyRing PolyRing::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> names = variables_;
  names.insert(names.end(), extra.begin(), extra.end());
  return PolyRing(std::move(names));
}

}  // namespace summandlab
