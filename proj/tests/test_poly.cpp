#include <doctest.h>

#include <random>

#include "summandlab/calculus.hpp"
#include "summandlab/errors.hpp"
#include "summandlab/parser.hpp"

using namespace summandlab;

namespace {

Polynomial random_polynomial(const PolyRing& ring, std::mt19937& rng, int max_terms = 4,
                             int max_exp = 3) {
  std::uniform_int_distribution<int> term_count(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coef(-5, 5);
  Polynomial p = Polynomial::zero(ring);
  int terms = term_count(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(ring.arity());
    for (auto& x : e) x = exp(rng);
    p = p + Polynomial::term(ring, Monomial(e), Scalar(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("parsing the named forms") {
  PolyRing ring({"x", "y", "z", "w"});
  Polynomial cubic = parse_polynomial("x^3 - y*z*w", ring);
  CHECK(cubic.term_count() == 2);
  CHECK(cubic.to_string() == "x^3 - y*z*w");

  CHECK(parse_polynomial("0", ring).is_zero());

  Polynomial expanded = parse_polynomial("y^3 + w*(x^2 + y*z)", ring);
  CHECK(expanded.term_count() == 3);
  CHECK(expanded == parse_polynomial("y^3 + x^2*w + y*z*w", ring));
}

TEST_CASE("parser rejects bad input with positions") {
  PolyRing ring({"x", "y"});
  CHECK_THROWS_AS(parse_polynomial("x + q", ring), ParseError);
  try {
    parse_polynomial("x + q", ring);
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::UnknownVariable);
    CHECK(e.position() == 4);
  }
  // Juxtaposition is not multiplication.
  CHECK_THROWS_AS(parse_polynomial("2x", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x y", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^-2", ring), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x", ring), ParseError);
  // Rational literals are fine.
  CHECK(parse_polynomial("2/4", ring) == Polynomial::constant(ring, scalar_of(1, 2)));
}

TEST_CASE("arithmetic identities") {
  PolyRing xy({"x", "y"});
  CHECK(parse_polynomial("(x+y)*(x-y)", xy) == parse_polynomial("x^2 - y^2", xy));

  PolyRing uv({"u", "v"});
  Polynomial u = Polynomial::variable(uv, 0);
  Polynomial v = Polynomial::variable(uv, 1);
  CHECK((u.pow(2) * v.pow(2) - (u * v).pow(2)).is_zero());

  PolyRing a({"a0", "a1", "a2"});
  Polynomial prod = parse_polynomial("a0*a1*a2", a);
  Polynomial lhs = prod.pow(3);
  Polynomial rhs = parse_polynomial("a0^3*a1^3*a2^3", a);
  CHECK((lhs - rhs).is_zero());
}

TEST_CASE("arithmetic rejects ring mismatches") {
  PolyRing r1({"x"});
  PolyRing r2({"y"});
  Polynomial x = Polynomial::variable(r1, 0);
  Polynomial y = Polynomial::variable(r2, 0);
  CHECK_THROWS_AS(x + y, AlgebraError);
  CHECK_THROWS_AS(x.pow(-1), AlgebraError);
}

TEST_CASE("ring axioms on randomized polynomials") {
  PolyRing ring({"x", "y", "z"});
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial a = random_polynomial(ring, rng);
    Polynomial b = random_polynomial(ring, rng);
    Polynomial c = random_polynomial(ring, rng);
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a * b) == (b * a));
    CHECK((a + b) == (b + a));
  }
}

TEST_CASE("parse-print round trip is the identity") {
  PolyRing ring({"x", "y", "z"});
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial p = random_polynomial(ring, rng);
    CHECK(parse_polynomial(p.to_string(), ring) == p);
  }
}

TEST_CASE("substitution") {
  PolyRing source({"x", "y", "z", "w"});
  PolyRing target({"u", "v", "s", "t"});
  Polynomial q = parse_polynomial("x*w - y*z", source);
  std::vector<Polynomial> segre = {
      parse_polynomial("u*s", target), parse_polynomial("u*t", target),
      parse_polynomial("v*s", target), parse_polynomial("v*t", target)};
  CHECK(q.substitute(segre).is_zero());

  std::vector<Polynomial> identity;
  for (std::size_t i = 0; i < source.arity(); ++i) {
    identity.push_back(Polynomial::variable(source, i));
  }
  Polynomial p = parse_polynomial("x^2*w - 3*y + 1/2", source);
  CHECK(p.substitute(identity) == p);

  // x0^d - x1...xd vanishes under the toric cover map (n = d = 3).
  PolyRing x4({"x0", "x1", "x2", "x3"});
  PolyRing u3({"u1", "u2", "u3"});
  Polynomial rel = parse_polynomial("x0^3 - x1*x2*x3", x4);
  std::vector<Polynomial> cover = {
      parse_polynomial("u1*u2*u3", u3), parse_polynomial("u1^3", u3),
      parse_polynomial("u2^3", u3), parse_polynomial("u3^3", u3)};
  CHECK(rel.substitute(cover).is_zero());
}

TEST_CASE("substitution is a ring homomorphism") {
  PolyRing source({"x", "y"});
  PolyRing target({"u", "v"});
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> images = {random_polynomial(target, rng, 3, 2),
                                      random_polynomial(target, rng, 3, 2)};
    Polynomial a = random_polynomial(source, rng, 3, 2);
    Polynomial b = random_polynomial(source, rng, 3, 2);
    CHECK((a * b).substitute(images) == a.substitute(images) * b.substitute(images));
    CHECK((a + b).substitute(images) == a.substitute(images) + b.substitute(images));
  }
}

TEST_CASE("partial derivatives") {
  PolyRing ring({"x", "y", "z", "w"});
  auto partials = partial_derivatives(parse_polynomial("x^3 - y*z*w", ring));
  CHECK(partials[0] == parse_polynomial("3*x^2", ring));
  CHECK(partials[1] == parse_polynomial("-z*w", ring));
  CHECK(partials[2] == parse_polynomial("-y*w", ring));
  CHECK(partials[3] == parse_polynomial("-y*z", ring));

  for (const auto& d : partial_derivatives(Polynomial::constant(ring, Scalar(5)))) {
    CHECK(d.is_zero());
  }

  PolyRing xyz({"x", "y", "z"});
  auto linear = partial_derivatives(parse_polynomial("x^2 + y^2 + z^2", xyz));
  CHECK(linear[0] == parse_polynomial("2*x", xyz));
  CHECK(linear[1] == parse_polynomial("2*y", xyz));
  CHECK(linear[2] == parse_polynomial("2*z", xyz));
}

TEST_CASE("mixed partials commute") {
  PolyRing ring({"x", "y", "z"});
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial p = random_polynomial(ring, rng, 5, 4);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        CHECK(derivative(derivative(p, i), j) == derivative(derivative(p, j), i));
      }
    }
  }
}

TEST_CASE("jets filter by total degree") {
  PolyRing ring({"x", "y", "w"});
  Polynomial p = parse_polynomial("y^3 + w*x^2 + w^2", ring);
  CHECK(jet(p, 2) == parse_polynomial("w^2", ring));
  CHECK(jet(p, 3) == p);
  CHECK(jet(p, p.total_degree()) == p);
}

TEST_CASE("hessian at the origin") {
  PolyRing xyz({"x", "y", "z"});
  auto h1 = hessian_at_origin(parse_polynomial("x^2 + y^2 + z^2", xyz));
  CHECK(h1.rank == 3);
  CHECK(h1.corank == 0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(h1.matrix[i][i] == 2);

  PolyRing xzw({"x", "z", "w"});
  auto h2 = hessian_at_origin(parse_polynomial("x^3 - z*w", xzw));
  CHECK(h2.rank == 2);
  CHECK(h2.corank == 1);

  PolyRing xyw({"x", "y", "w"});
  auto h3 = hessian_at_origin(parse_polynomial("y^3 + w*x^2 + w^2", xyw));
  CHECK(h3.rank == 1);
  CHECK(h3.corank == 2);
}

TEST_CASE("chart localization") {
  PolyRing ring({"x", "y", "z", "w"});
  Polynomial cubic = parse_polynomial("x^3 - y*z*w", ring);
  Polynomial local = chart_localize(cubic, "w", {Scalar(0), Scalar(0), Scalar(0), Scalar(1)});
  PolyRing xyz({"x", "y", "z"});
  CHECK(local == parse_polynomial("x^3 - y*z", xyz));

  // Smooth point of a quadric: nonzero linear part after translation.
  Polynomial quad = parse_polynomial("x*w - y*z", ring);
  Polynomial at_smooth =
      chart_localize(quad, "w", {Scalar(1), Scalar(1), Scalar(1), Scalar(1)});
  CHECK(at_smooth.evaluate({Scalar(0), Scalar(0), Scalar(0)}) == 0);
  CHECK(!jet(at_smooth, 1).is_zero());

  Polynomial e6 = parse_polynomial("y^3 + w*(x^2 + z*w)", ring);
  Polynomial e6_local =
      chart_localize(e6, "z", {Scalar(0), Scalar(0), Scalar(1), Scalar(0)});
  PolyRing xyw({"x", "y", "w"});
  CHECK(e6_local == parse_polynomial("y^3 + w*x^2 + w^2", xyw));

  CHECK_THROWS_AS(
      chart_localize(cubic, "x", {Scalar(0), Scalar(0), Scalar(0), Scalar(1)}),
      AlgebraError);
  CHECK_THROWS_AS(
      chart_localize(parse_polynomial("x^2 - y", ring), "w",
                     {Scalar(0), Scalar(0), Scalar(0), Scalar(1)}),
      AlgebraError);
}
