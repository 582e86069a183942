#include "summandlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "summandlab/errors.hpp"

namespace summandlab {

Polynomial::Polynomial(PolyRing ring, TermMap terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.arity() != ring_.arity()) {
      throw AlgebraError(Errc::ArityMismatch, "monomial arity does not match ring");
    }
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

Polynomial Polynomial::constant(const PolyRing& ring, const Scalar& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.emplace(Monomial::one(ring.arity()), c);
  return p;
}

Polynomial Polynomial::variable(const PolyRing& ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.emplace(Monomial::variable(ring.arity(), index), Scalar(1));
  return p;
}

Polynomial Polynomial::term(const PolyRing& ring, const Monomial& m, const Scalar& c) {
  Polynomial p(ring);
  if (m.arity() != ring.arity()) {
    throw AlgebraError(Errc::ArityMismatch, "monomial arity does not match ring");
  }
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (ring_ != other.ring_) {
    throw AlgebraError(Errc::RingMismatch, "polynomials live in different rings");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial r = *this;
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = r.terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) r.terms_.erase(it);
    }
  }
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_same_ring(other);
  Polynomial r(ring_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      Monomial m = ma.times(mb);
      Scalar c = ca * cb;
      auto [it, inserted] = r.terms_.emplace(std::move(m), c);
      if (!inserted) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(ring_);
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) { return p.scaled(c); }

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw AlgebraError(Errc::NegativeExponent, "negative polynomial power");
  Polynomial result = Polynomial::constant(ring_, Scalar(1));
  Polynomial base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_.arity()) {
    throw AlgebraError(Errc::ArityMismatch, "substitution needs one image per variable");
  }
  PolyRing target = images.empty() ? ring_ : images.front().ring();
  for (const auto& img : images) {
    if (img.ring() != target) {
      throw AlgebraError(Errc::RingMismatch, "substitution images live in different rings");
    }
  }
  // Cache powers of each image up to the largest exponent used.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    powers[i].push_back(Polynomial::constant(target, Scalar(1)));
  }
  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial prod = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < images.size(); ++i) {
      int e = m[i];
      while (static_cast<int>(powers[i].size()) <= e) {
        powers[i].push_back(powers[i].back() * images[i]);
      }
      if (e > 0) prod = prod * powers[i][e];
    }
    result = result + prod;
  }
  return result;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
  if (point.size() != ring_.arity()) {
    throw AlgebraError(Errc::ArityMismatch, "evaluation needs one value per variable");
  }
  Scalar total(0);
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < m[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

namespace {

void append_monomial(std::ostringstream& out, const PolyRing& ring, const Monomial& m,
                     bool lead_star) {
  bool first = !lead_star;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << ring.variable(i);
    if (m[i] > 1) out << "^" << m[i];
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Display from the canonical leading term downward.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Monomial& m = it->first;
    Scalar c = it->second;
    bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    Scalar a = negative ? Scalar(-c) : c;
    if (m.is_one()) {
      out << a.get_str();
    } else if (a == 1) {
      append_monomial(out, ring_, m, false);
    } else {
      out << a.get_str();
      append_monomial(out, ring_, m, true);
    }
    first = false;
  }
  return out.str();
}

}  // namespace summandlab
