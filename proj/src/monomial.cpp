#include "summandlab/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "summandlab/errors.hpp"

namespace summandlab {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw AlgebraError(Errc::NegativeExponent, "negative exponent in monomial");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, int power) {
  std::vector<int> e(arity, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& other) const {
  std::vector<int> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] + other.exponents_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  std::vector<int> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] - other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::power(int k) const {
  if (k < 0) throw AlgebraError(Errc::NegativeExponent, "negative monomial power");
  std::vector<int> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] * k;
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  std::vector<int> e(a.exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    if (a.exponents_[i] > 0 && b.exponents_[i] > 0) return false;
  }
  return true;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  // Equal degree: a > b iff the last nonzero entry of a-b is negative.
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (std::size_t i = ea.size(); i-- > 0;) {
    int d = ea[i] - eb[i];
    if (d != 0) return d > 0;  // larger trailing exponent means smaller monomial
  }
  return false;
}

}  // namespace summandlab
