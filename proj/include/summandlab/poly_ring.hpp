#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace summandlab {

// A polynomial ring is identified by its ordered list of variable names.
class PolyRing {
 public:
  PolyRing() = default;
  explicit PolyRing(std::vector<std::string> variables);
  PolyRing(std::initializer_list<std::string> variables)
      : PolyRing(std::vector<std::string>(variables)) {}

  std::size_t arity() const { return variables_.size(); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::string& variable(std::size_t i) const { return variables_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  // Ring with the variable at `drop` removed; names keep their order.
  PolyRing without_variable(std::size_t drop) const;
  // Ring with extra variables appended.
  PolyRing extended(const std::vector<std::string>& extra) const;

  bool operator==(const PolyRing& other) const { return variables_ == other.variables_; }
  bool operator!=(const PolyRing& other) const { return !(*this == other); }

 private:
  std::vector<std::string> variables_;
};

}  // namespace summandlab
