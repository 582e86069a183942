#pragma once

#include <cstddef>
#include <vector>

namespace summandlab {

// Exponent vector of fixed length (the ring arity). Entries are nonnegative.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t arity) { return Monomial(std::vector<int>(arity, 0)); }
  static Monomial variable(std::size_t arity, std::size_t index, int power = 1);

  std::size_t arity() const { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }
  int total_degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Requires divisibility.
  Monomial divided_by(const Monomial& other) const;
  Monomial power(int k) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }
  bool operator!=(const Monomial& other) const { return !(*this == other); }

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

// Graded reverse lexicographic comparison in the ring's variable order; this
// is the canonical order used for term storage and display.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct CanonicalTermLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

}  // namespace summandlab
