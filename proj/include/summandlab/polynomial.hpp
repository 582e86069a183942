#pragma once

#include <map>
#include <string>
#include <vector>

#include "summandlab/monomial.hpp"
#include "summandlab/poly_ring.hpp"
#include "summandlab/scalar.hpp"

namespace summandlab {

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// stored in the canonical grevlex order of the ring; zero coefficients are
// never stored. Values are immutable in practice: every operation returns a
// fresh polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, CanonicalTermLess>;

  Polynomial() = default;
  explicit Polynomial(PolyRing ring) : ring_(std::move(ring)) {}
  Polynomial(PolyRing ring, TermMap terms);

  static Polynomial zero(const PolyRing& ring) { return Polynomial(ring); }
  static Polynomial constant(const PolyRing& ring, const Scalar& c);
  static Polynomial variable(const PolyRing& ring, std::size_t index);
  static Polynomial term(const PolyRing& ring, const Monomial& m, const Scalar& c);

  const PolyRing& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  // Total degree; -1 for the zero polynomial.
  int total_degree() const;
  Scalar coefficient(const Monomial& m) const;
  // Constant term (coefficient of 1).
  Scalar constant_term() const { return coefficient(Monomial::one(ring_.arity())); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial pow(int exponent) const;

  bool operator==(const Polynomial& other) const {
    return ring_ == other.ring_ && terms_ == other.terms_;
  }
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  // Evaluates the polynomial at one image per source variable; all images
  // must live in a common ring, which becomes the result ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  // Evaluates at a rational point.
  Scalar evaluate(const std::vector<Scalar>& point) const;

  std::string to_string() const;

 private:
  void check_same_ring(const Polynomial& other) const;

  PolyRing ring_;
  TermMap terms_;
};

Polynomial operator*(const Scalar& c, const Polynomial& p);

}  // namespace summandlab
