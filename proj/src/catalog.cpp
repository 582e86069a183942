#include "summandlab/catalog.hpp"

#include <algorithm>

#include <functional>

#include "summandlab/calculus.hpp"
#include "summandlab/errors.hpp"
#include "summandlab/parser.hpp"
#include "summandlab/rat_linalg.hpp"

namespace summandlab {

namespace {

void need_params(const std::vector<long>& params, std::size_t count, const std::string& key) {
  if (params.size() != count) {
    throw AlgebraError(Errc::BadParams,
                       key + " expects " + std::to_string(count) + " parameter(s)");
  }
}

// x1 x2 + x3 x4 + ...; an odd variable count ends with -x_n^2. The alternating
// signs of the first display are absorbed into this normal form by a linear
// change of variables.
Polynomial quadric_form(const PolyRing& ring) {
  std::size_t n = ring.arity();
  Polynomial q = Polynomial::zero(ring);
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    q = q + Polynomial::variable(ring, i) * Polynomial::variable(ring, i + 1);
  }
  if (n % 2 == 1) {
    q = q - Polynomial::variable(ring, n - 1) * Polynomial::variable(ring, n - 1);
  }
  return q;
}

NamedExample make_quadric(long n) {
  if (n < 2) throw AlgebraError(Errc::BadParams, "quadric needs at least two variables");
  std::vector<std::string> names;
  for (long i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  PolyRing ring(names);
  Polynomial q = quadric_form(ring);
  NamedExample ex;
  ex.key = "quadric";
  ex.description = "full-rank quadric hypersurface ring in " + std::to_string(n) +
                   " variables, normalized to the x1x2+x3x4+... form";
  ex.ring = QuotientRing(ring, Ideal(ring, {q}), MultiGrading::standard(ring.arity()));
  ex.named_polynomials.emplace_back("relation", q);
  return ex;
}

NamedExample make_segre() {
  PolyRing source_ring({"x", "y", "z", "w"});
  Polynomial rel = parse_polynomial("x*w - y*z", source_ring);
  QuotientRing source(source_ring, Ideal(source_ring, {rel}),
                      MultiGrading({{2, 2, 2, 2}}));
  PolyRing target_ring({"u", "v", "s", "t"});
  QuotientRing target(target_ring, Ideal::zero(target_ring),
                      MultiGrading::standard(4));
  std::vector<Polynomial> images = {
      parse_polynomial("u*s", target_ring), parse_polynomial("u*t", target_ring),
      parse_polynomial("v*s", target_ring), parse_polynomial("v*t", target_ring)};
  NamedExample ex;
  ex.key = "segre";
  ex.description = "rank-4 quadric cone as the Segre coordinate ring of P1 x P1";
  ex.map = RingMap(source, target, images);
  ex.ring = source;
  ex.named_polynomials.emplace_back("relation", rel);
  return ex;
}

NamedExample make_veronese2() {
  PolyRing source_ring({"x", "y", "z"});
  Polynomial rel = parse_polynomial("x*z - y^2", source_ring);
  QuotientRing source(source_ring, Ideal(source_ring, {rel}), MultiGrading({{2, 2, 2}}));
  PolyRing target_ring({"u", "v"});
  QuotientRing target(target_ring, Ideal::zero(target_ring), MultiGrading::standard(2));
  std::vector<Polynomial> images = {parse_polynomial("u^2", target_ring),
                                    parse_polynomial("u*v", target_ring),
                                    parse_polynomial("v^2", target_ring)};
  NamedExample ex;
  ex.key = "veronese2";
  ex.description = "plane conic coordinate ring embedded as the even part of k[u,v]";
  ex.map = RingMap(source, target, images);
  ex.ring = source;
  ex.named_polynomials.emplace_back("relation", rel);
  return ex;
}

NamedExample make_xnd(long n, long d) {
  if (d < 2 || n < d) throw AlgebraError(Errc::BadParams, "xnd needs 2 <= d <= n");
  std::vector<std::string> source_names;
  for (long i = 0; i <= n; ++i) source_names.push_back("x" + std::to_string(i));
  PolyRing source_ring(source_names);
  Polynomial rel = Polynomial::variable(source_ring, 0).pow(static_cast<int>(d));
  Polynomial prod = Polynomial::constant(source_ring, Scalar(1));
  for (long i = 1; i <= d; ++i) prod = prod * Polynomial::variable(source_ring, i);
  rel = rel - prod;
  QuotientRing source(source_ring, Ideal(source_ring, {rel}),
                      MultiGrading({std::vector<long>(source_ring.arity(), d)}));

  std::vector<std::string> target_names;
  for (long i = 1; i <= n; ++i) target_names.push_back("u" + std::to_string(i));
  PolyRing target_ring(target_names);
  QuotientRing target(target_ring, Ideal::zero(target_ring),
                      MultiGrading::standard(target_ring.arity()));
  std::vector<Polynomial> images;
  Polynomial u_prod = Polynomial::constant(target_ring, Scalar(1));
  for (long i = 0; i < d; ++i) u_prod = u_prod * Polynomial::variable(target_ring, i);
  images.push_back(u_prod);
  for (long i = 0; i < n; ++i) {
    images.push_back(Polynomial::variable(target_ring, i).pow(static_cast<int>(d)));
  }
  NamedExample ex;
  ex.key = "xnd";
  ex.description = "degree-" + std::to_string(d) + " hypersurface x0^d = x1...x" +
                   std::to_string(d) + " in P" + std::to_string(n) +
                   " with its finite toric cover by affine space";
  ex.map = RingMap(source, target, images);
  ex.ring = source;
  ex.named_polynomials.emplace_back("relation", rel);
  return ex;
}

struct WeylData {
  PolyRing ring;                     // k[u_ij, v_j]
  std::vector<Polynomial> minors;    // Delta_1 .. Delta_{c+1}
  std::vector<Polynomial> products;  // p_1 .. p_{c+1}
};

WeylData weyl_generators(long c) {
  if (c < 1) throw AlgebraError(Errc::BadParams, "weyl needs c >= 1");
  std::vector<std::string> names;
  for (long i = 1; i <= c; ++i) {
    for (long j = 1; j <= c + 1; ++j) {
      names.push_back("u" + std::to_string(i) + std::to_string(j));
    }
  }
  for (long j = 1; j <= c; ++j) names.push_back("v" + std::to_string(j));
  WeylData data{PolyRing(names), {}, {}};
  auto u = [&](long i, long j) {
    return Polynomial::variable(data.ring, static_cast<std::size_t>((i - 1) * (c + 1) + (j - 1)));
  };
  auto v = [&](long j) {
    return Polynomial::variable(data.ring, static_cast<std::size_t>(c * (c + 1) + (j - 1)));
  };

  // Determinant of the square submatrix on the given columns, by expansion
  // along the first row.
  std::function<Polynomial(long, std::vector<long>)> det =
      [&](long row_from, std::vector<long> cols) -> Polynomial {
    if (cols.size() == 1) return u(row_from, cols[0]);
    Polynomial acc = Polynomial::zero(data.ring);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<long> rest;
      for (std::size_t t = 0; t < cols.size(); ++t) {
        if (t != k) rest.push_back(cols[t]);
      }
      Polynomial term = u(row_from, cols[k]) * det(row_from + 1, rest);
      acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };

  for (long omit = 1; omit <= c + 1; ++omit) {
    std::vector<long> cols;
    for (long j = 1; j <= c + 1; ++j) {
      if (j != omit) cols.push_back(j);
    }
    data.minors.push_back(det(1, cols));
    Polynomial p = Polynomial::zero(data.ring);
    // Column-indexed inner product: p_i = sum_j u_{j,i} v_j. The row-indexed
    // form in the source text does not type-check against a c x (c+1)
    // matrix; this is the unique reading under which the relation vanishes.
    for (long j = 1; j <= c; ++j) p = p + u(j, omit) * v(j);
    data.products.push_back(p);
  }
  return data;
}

NamedExample make_weyl(long c) {
  WeylData data = weyl_generators(c);
  NamedExample quadric = make_quadric(2 * c + 2);
  QuotientRing target(data.ring, Ideal::zero(data.ring),
                      MultiGrading::standard(data.ring.arity()));
  // Signs are absorbed into the generator images so that
  // x1 x2 + x3 x4 + ... maps onto the alternating relation.
  std::vector<Polynomial> images;
  for (long i = 1; i <= c + 1; ++i) {
    Polynomial delta = data.minors[i - 1];
    if (i % 2 == 0) delta = -delta;
    images.push_back(delta);
    images.push_back(data.products[i - 1]);
  }
  NamedExample ex;
  ex.key = "weyl";
  ex.description =
      "invariant-theory presentation of the even quadric: maximal minors and inner "
      "products of a generic " +
      std::to_string(c) + "x" + std::to_string(c + 1) + " matrix";
  ex.map = RingMap(*quadric.ring, target, images);
  ex.ring = quadric.ring;
  for (long i = 1; i <= c + 1; ++i) {
    ex.named_polynomials.emplace_back("Delta" + std::to_string(i), data.minors[i - 1]);
    ex.named_polynomials.emplace_back("p" + std::to_string(i), data.products[i - 1]);
  }
  return ex;
}

NamedExample make_dp5cox() {
  PolyRing ring({"f12", "f13", "f14", "f23", "f24", "f34", "e1", "e2", "e3", "e4"});
  auto p = [&](const std::string& text) { return parse_polynomial(text, ring); };

  SkewMatrix m(5, ring);
  m.set_upper(1, 2, p("f12"));
  m.set_upper(1, 3, p("f13"));
  m.set_upper(1, 4, p("f14"));
  m.set_upper(1, 5, p("f23"));
  m.set_upper(2, 3, p("f24"));
  m.set_upper(2, 4, p("f34"));
  m.set_upper(2, 5, p("e1"));
  m.set_upper(3, 4, p("e2"));
  m.set_upper(3, 5, p("e3"));
  m.set_upper(4, 5, p("e4"));

  std::vector<Polynomial> pfaffians;
  for (std::size_t omit = 1; omit <= 5; ++omit) pfaffians.push_back(pfaffian(m, omit));

  // Divisor-class weights in the basis (H, E1, E2, E3, E4): a line class
  // f_ij has weight H - Ei - Ej, an exceptional class e_i has weight Ei.
  MultiGrading naive({{1, 1, 1, 1, 1, 1, 0, 0, 0, 0},
                      {-1, -1, -1, 0, 0, 0, 1, 0, 0, 0},
                      {-1, 0, 0, -1, -1, 0, 0, 1, 0, 0},
                      {0, -1, 0, -1, 0, -1, 0, 0, 1, 0},
                      {0, 0, -1, 0, -1, -1, 0, 0, 0, 1}});

  NamedExample ex;
  ex.key = "dp5cox";
  ex.description =
      "total coordinate ring of the degree-5 del Pezzo surface: ten generators and the "
      "five 4x4 Pfaffians of the displayed skew matrix, with the divisor-class weights";
  ex.matrix = m;
  ex.grading = naive;
  ex.ring = QuotientRing(ring, Ideal(ring, pfaffians));
  for (std::size_t i = 0; i < 5; ++i) {
    ex.named_polynomials.emplace_back("pfaffian" + std::to_string(i + 1), pfaffians[i]);
  }
  const char* anticanonical[6] = {
      "f12*f34^2*e3*e4", "f13*f23*f24*e2*e3", "f13*f23*f34*e3^2",
      "f13*f24^2*e2*e4", "f13*f24*f34*e3*e4", "f14*f24*f34*e4^2"};
  for (int i = 0; i < 6; ++i) {
    ex.named_polynomials.emplace_back("anticanonical" + std::to_string(i + 1),
                                      p(anticanonical[i]));
  }
  return ex;
}

NamedExample make_dp4(const std::string& key) {
  PolyRing ring({"x", "y", "z", "w", "u"});
  NamedExample ex;
  ex.key = key;
  if (key == "dp4a") {
    ex.description =
        "toric degree-4 del Pezzo: one A3 and two A1 points, Milnor sum 5; a finite "
        "direct summand";
    ex.ring = QuotientRing(ring, Ideal(ring, {parse_polynomial("w^2 - y*u", ring),
                                              parse_polynomial("x^2 - z*w", ring)}));
  } else {
    ex.description =
        "toric degree-4 del Pezzo: four A1 points, Milnor sum 4; a direct summand but "
        "not a finite one";
    ex.ring = QuotientRing(ring, Ideal(ring, {parse_polynomial("y*z - w*u", ring),
                                              parse_polynomial("x^2 - w*u", ring)}));
  }
  return ex;
}

NamedExample make_cubic(const std::string& key) {
  PolyRing ring({"x", "y", "z", "w"});
  NamedExample ex;
  ex.key = key;
  std::string text;
  if (key == "cubic3A2") {
    text = "x^3 - y*z*w";
    ex.description = "toric cubic surface with three A2 points";
  } else if (key == "cubicA1A5") {
    text = "y^3 + w*(x^2 + y*z)";
    ex.description = "cubic surface with an A1 and an A5 point";
  } else {
    text = "y^3 + w*(x^2 + z*w)";
    ex.description = "cubic surface with a single E6 point";
  }
  Polynomial f = parse_polynomial(text, ring);
  ex.ring = QuotientRing(ring, Ideal(ring, {f}));
  ex.named_polynomials.emplace_back("form", f);
  return ex;
}

}  // namespace

std::vector<std::string> catalog_keys() {
  return {"quadric", "segre", "veronese2", "xnd",      "weyl",      "dp5cox",
          "dp4a",    "dp4b",  "cubic3A2",  "cubicA1A5", "cubicE6"};
}

NamedExample build_named_example(const std::string& key, const std::vector<long>& params) {
  if (key == "quadric") {
    need_params(params, 1, key);
    return make_quadric(params[0]);
  }
  if (key == "segre") {
    need_params(params, 0, key);
    return make_segre();
  }
  if (key == "veronese2") {
    need_params(params, 0, key);
    return make_veronese2();
  }
  if (key == "xnd") {
    need_params(params, 2, key);
    return make_xnd(params[0], params[1]);
  }
  if (key == "weyl") {
    need_params(params, 1, key);
    return make_weyl(params[0]);
  }
  if (key == "dp5cox") {
    need_params(params, 0, key);
    return make_dp5cox();
  }
  if (key == "dp4a" || key == "dp4b") {
    need_params(params, 0, key);
    return make_dp4(key);
  }
  if (key == "cubic3A2" || key == "cubicA1A5" || key == "cubicE6") {
    need_params(params, 0, key);
    return make_cubic(key);
  }
  throw AlgebraError(Errc::UnknownExample, "unknown example key: " + key);
}

WeylRelation verify_weyl_relation(long c) {
  WeylData data = weyl_generators(c);
  WeylRelation rel;
  Polynomial sum = Polynomial::zero(data.ring);
  for (long i = 1; i <= c + 1; ++i) {
    Polynomial term = data.minors[i - 1] * data.products[i - 1];
    rel.term_instances += data.minors[i - 1].term_count() * data.products[i - 1].term_count();
    sum = (i % 2 == 1) ? sum + term : sum - term;
  }
  rel.expanded = sum;
  rel.is_zero = sum.is_zero();
  return rel;
}

std::size_t quadric_rank(const Polynomial& q) {
  if (q.is_zero() || !is_homogeneous(q) || q.total_degree() != 2) {
    throw AlgebraError(Errc::NotQuadratic, "quadric rank needs a homogeneous quadratic");
  }
  std::size_t n = q.ring().arity();
  QMatrix b(n, std::vector<Scalar>(n, Scalar(0)));
  for (const auto& [m, c] : q.terms()) {
    std::size_t i = n, j = n;
    for (std::size_t k = 0; k < n; ++k) {
      if (m[k] == 2) i = j = k;
      if (m[k] == 1) (i == n ? i : j) = k;
    }
    if (i == j) {
      b[i][i] = c;
    } else {
      b[i][j] = c / 2;
      b[j][i] = c / 2;
    }
  }
  return matrix_rank(b);
}

}  // namespace summandlab
