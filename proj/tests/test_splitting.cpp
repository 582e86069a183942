#include <doctest.h>

#include <random>

#include "summandlab/catalog.hpp"
#include "summandlab/errors.hpp"
#include "summandlab/graded_rings.hpp"
#include "summandlab/parser.hpp"
#include "summandlab/splitting.hpp"

using namespace summandlab;

namespace {

Polynomial tgt(const RingMap& map, const std::string& text) {
  return parse_polynomial(text, map.target().ambient());
}

Polynomial src(const RingMap& map, const std::string& text) {
  return parse_polynomial(text, map.source().ambient());
}

}  // namespace

TEST_CASE("semigroup projection for the conic") {
  NamedExample veronese = build_named_example("veronese2");
  const RingMap& map = *veronese.map;
  SplittingSpec spec = SplittingSpec::make_semigroup_projection(map, 8);
  CHECK(spec.evaluate(tgt(map, "u")).is_zero());
  CHECK(spec.evaluate(tgt(map, "u^2")) == src(map, "x"));
  CHECK(spec.evaluate(tgt(map, "1")) == src(map, "1"));
  // Both factorizations of u^2 v^2 rewrite to the same canonical class.
  Polynomial image = spec.evaluate(tgt(map, "u^2*v^2"));
  CHECK(map.source().same_class(image, src(map, "x*z")));

  SplittingReport report = verify_splitting(map, spec, 8);
  CHECK(report.verdict == SplittingReport::Verdict::VerifiedToBound);
  CHECK(report.sigma_fixes_one);
  CHECK(report.violations.empty());
}

TEST_CASE("semigroup projection for the Segre inclusion") {
  NamedExample segre = build_named_example("segre");
  const RingMap& map = *segre.map;
  SplittingSpec spec = SplittingSpec::make_semigroup_projection(map, 6);
  CHECK(spec.evaluate(tgt(map, "u")).is_zero());
  CHECK(spec.evaluate(tgt(map, "u*s")) == src(map, "x"));
  // u t v s has balanced exponent, and rewrites canonically modulo xw - yz.
  Polynomial cross = spec.evaluate(tgt(map, "u*t*v*s"));
  CHECK(map.source().same_class(cross, src(map, "x*w")));
  SplittingReport report = verify_splitting(map, spec, 5);
  CHECK(report.verdict == SplittingReport::Verdict::VerifiedToBound);
}

TEST_CASE("toric cover projection for x0^3 = x1 x2 x3") {
  NamedExample xnd = build_named_example("xnd", {3, 3});
  const RingMap& map = *xnd.map;
  SplittingSpec spec = SplittingSpec::make_semigroup_projection(map, 6);
  CHECK(spec.evaluate(tgt(map, "u1*u2*u3")) == src(map, "x0"));
  CHECK(spec.evaluate(tgt(map, "u1")).is_zero());
  SplittingReport report = verify_splitting(map, spec, 4);
  CHECK(report.verdict == SplittingReport::Verdict::VerifiedToBound);
}

TEST_CASE("fullness failures carry a witness") {
  PolyRing source({"x", "y"});
  PolyRing target({"u", "v"});
  RingMap map(QuotientRing::free(source), QuotientRing::free(target),
              {parse_polynomial("u^2", target), parse_polynomial("u*v", target)});
  try {
    SplittingSpec::make_semigroup_projection(map, 6);
    FAIL("expected a fullness failure");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == Errc::FullnessFailure);
    CHECK(e.witness() == "v^2");
  }

  RingMap bad(QuotientRing::free(source), QuotientRing::free(target),
              {parse_polynomial("u + v", target), parse_polynomial("u*v", target)});
  CHECK_THROWS_AS(SplittingSpec::make_semigroup_projection(bad, 4), AlgebraError);
}

TEST_CASE("weight projection onto torus invariants") {
  PolyRing uv({"u", "v"});
  QuotientRing target = QuotientRing::free(uv);
  MultiGrading action({{1, -1}});
  SplittingSpec spec = SplittingSpec::make_weight_projection(
      target, action, {parse_polynomial("u*v", uv)});
  const RingMap& map = spec.map();
  CHECK(spec.evaluate(parse_polynomial("u^2*v", uv)).is_zero());
  CHECK(spec.evaluate(parse_polynomial("u*v", uv)) ==
        Polynomial::variable(map.source().ambient(), 0));
  CHECK(spec.evaluate(parse_polynomial("1", uv)) ==
        Polynomial::constant(map.source().ambient(), Scalar(1)));
  SplittingReport report = verify_splitting(map, spec, 6);
  CHECK(report.verdict == SplittingReport::Verdict::VerifiedToBound);

  // Non-invariant generator is rejected with a witness.
  try {
    SplittingSpec::make_weight_projection(target, action, {parse_polynomial("u", uv)});
    FAIL("expected a rejected generator");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == Errc::GeneratorNotInvariant);
  }
}

TEST_CASE("weight-row scaling leaves weight projections unchanged") {
  std::mt19937 rng(4242);
  PolyRing uv({"u", "v"});
  QuotientRing target = QuotientRing::free(uv);
  std::uniform_int_distribution<long> weight(1, 3);
  std::uniform_int_distribution<long> scale_dist(2, 5);
  int done = 0;
  while (done < 10) {
    long a = weight(rng), b = weight(rng);
    long scale = scale_dist(rng) * (rng() % 2 ? 1 : -1);
    MultiGrading action({{a, -b}});
    MultiGrading scaled({{scale * a, -scale * b}});
    // u^b v^a generates the invariants of the (a,-b) action.
    long g = std::gcd(a, b);
    std::vector<int> exps = {static_cast<int>(b / g), static_cast<int>(a / g)};
    Polynomial gen = Polynomial::term(uv, Monomial(exps), Scalar(1));
    SplittingSpec s1 = SplittingSpec::make_weight_projection(target, action, {gen});
    SplittingSpec s2 = SplittingSpec::make_weight_projection(target, scaled, {gen});
    for (const auto& m : monomials_up_to_degree(2, 5)) {
      Polynomial probe = Polynomial::term(uv, m, Scalar(1));
      CHECK(s1.evaluate(probe) == s2.evaluate(probe));
    }
    ++done;
  }
}

TEST_CASE("trace splitting certificates") {
  NamedExample veronese = build_named_example("veronese2");
  const RingMap& map = *veronese.map;
  SplittingSpec trace = SplittingSpec::make_trace_split(map, 8);
  CHECK(trace.trace_rank() == 2);
  REQUIRE(trace.trace_basis().size() == 2);
  CHECK(trace.trace_basis()[0].is_one());
  // sigma_0(1) = rank, so sigma(1) = 1 after normalization.
  CHECK(trace.evaluate(tgt(map, "1")) == src(map, "1"));
  CHECK(trace.evaluate(tgt(map, "u")).is_zero());
  CHECK(trace.evaluate(tgt(map, "u^2")) == src(map, "x"));
  CHECK(verify_splitting(map, trace, 8).verdict == SplittingReport::Verdict::VerifiedToBound);

  // Trace and semigroup projections agree on every monomial up to degree 8.
  SplittingSpec semi = SplittingSpec::make_semigroup_projection(map, 8);
  for (const auto& m : monomials_up_to_degree(2, 8)) {
    Polynomial probe = Polynomial::term(map.target().ambient(), m, Scalar(1));
    CHECK(trace.evaluate(probe) == semi.evaluate(probe));
  }

  NamedExample xnd = build_named_example("xnd", {3, 3});
  SplittingSpec xtrace = SplittingSpec::make_trace_split(*xnd.map, 6);
  CHECK(xtrace.trace_rank() == 9);
  SplittingSpec xsemi = SplittingSpec::make_semigroup_projection(*xnd.map, 6);
  for (const auto& m : monomials_up_to_degree(3, 6)) {
    Polynomial probe = Polynomial::term(xnd.map->target().ambient(), m, Scalar(1));
    CHECK(xtrace.evaluate(probe) == xsemi.evaluate(probe));
  }

  // Non-finite inclusions have no finite coset basis.
  PolyRing target2({"x", "y"});
  PolyRing source2({"x"});
  RingMap thin(QuotientRing::free(source2), QuotientRing::free(target2),
               {Polynomial::variable(target2, 0)});
  CHECK_THROWS_AS(SplittingSpec::make_trace_split(thin, 4), AlgebraError);
}

TEST_CASE("composition of splittings") {
  NamedExample veronese = build_named_example("veronese2");
  const RingMap& inner_map = *veronese.map;
  SplittingSpec inner = SplittingSpec::make_semigroup_projection(inner_map, 8);

  // Coordinate projection k[u,v] inside k[u,v,w].
  PolyRing uvw({"u", "v", "w"});
  RingMap outer_map(inner_map.target(), QuotientRing::free(uvw),
                    {parse_polynomial("u", uvw), parse_polynomial("v", uvw)});
  SplittingSpec outer = SplittingSpec::make_semigroup_projection(outer_map, 6);

  SplittingSpec composed = SplittingSpec::compose_splittings(inner, outer);
  CHECK(composed.evaluate(parse_polynomial("w", uvw)).is_zero());
  CHECK(composed.evaluate(parse_polynomial("u^2", uvw)) == src(inner_map, "x"));
  // Definitional property: composed evaluation equals the two stages.
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> e = {static_cast<int>(rng() % 4), static_cast<int>(rng() % 4),
                          static_cast<int>(rng() % 3)};
    Polynomial probe = Polynomial::term(uvw, Monomial(e), Scalar(1 + rng() % 5));
    CHECK(composed.evaluate(probe) == inner.evaluate(outer.evaluate(probe)));
  }
  SplittingReport report = verify_splitting(composed.map(), composed, 5);
  CHECK(report.verdict == SplittingReport::Verdict::VerifiedToBound);

  // Mismatched middle rings are rejected.
  CHECK_THROWS_AS(SplittingSpec::compose_splittings(outer, outer), AlgebraError);
}

TEST_CASE("descending a splitting to a quotient") {
  NamedExample veronese = build_named_example("veronese2");
  const RingMap& map = *veronese.map;
  SplittingSpec spec = SplittingSpec::make_semigroup_projection(map, 8);
  const PolyRing& source = map.source().ambient();

  SplittingSpec dropped =
      SplittingSpec::descend_splitting(spec, Ideal(source, {src(map, "y")}), 4);
  CHECK(dropped.evaluate(tgt(map, "u^2")) == src(map, "x"));
  CHECK(dropped.evaluate(tgt(map, "u*v")).is_zero());
  SplittingReport report = verify_splitting(dropped.map(), dropped, 5);
  CHECK(report.verdict == SplittingReport::Verdict::VerifiedToBound);

  // Descending along the unit ideal gives the zero-ring splitting, where the
  // class of 1 is 0 and verification is vacuous.
  SplittingSpec null =
      SplittingSpec::descend_splitting(spec, Ideal::unit(source), 2);
  CHECK(null.evaluate(tgt(map, "1")).is_zero());
  CHECK(verify_splitting(null.map(), null, 3).verdict ==
        SplittingReport::Verdict::VerifiedToBound);

  // Descending the identity splitting acts as the quotient map.
  PolyRing xy({"x", "y"});
  QuotientRing free_xy = QuotientRing::free(xy);
  RingMap identity(free_xy, free_xy,
                   {Polynomial::variable(xy, 0), Polynomial::variable(xy, 1)});
  SplittingSpec id_spec = SplittingSpec::make_semigroup_projection(identity, 4);
  SplittingSpec id_drop = SplittingSpec::descend_splitting(
      id_spec, Ideal(xy, {parse_polynomial("y", xy)}), 3);
  CHECK(id_drop.evaluate(parse_polynomial("x + y", xy)) == parse_polynomial("x", xy));
}

TEST_CASE("verification refutes a mismatched inclusion") {
  NamedExample veronese = build_named_example("veronese2");
  const RingMap& map = *veronese.map;
  SplittingSpec spec = SplittingSpec::make_semigroup_projection(map, 8);
  // Same rings, but the claimed inclusion sends z to v^2 + u^2; sigma is not
  // linear over it.
  RingMap tampered(map.source(), map.target(),
                   {tgt(map, "u^2"), tgt(map, "u*v"), tgt(map, "v^2 + u^2")});
  SplittingReport report = verify_splitting(tampered, spec, 4);
  CHECK(report.verdict == SplittingReport::Verdict::Refuted);
  CHECK(!report.violations.empty());
  // Witnesses carry both sides of a failed identity.
  const auto& v = report.violations.front();
  CHECK(!map.source().same_class(v.lhs, v.rhs));
}

TEST_CASE("report verdict tracks its fields") {
  PolyRing ring({"x"});
  SplittingReport report;
  report.sigma_of_one = Polynomial::zero(ring);
  report.sigma_fixes_one = false;
  report.degree_bound = 3;
  report.finalize();
  CHECK(report.verdict == SplittingReport::Verdict::Refuted);
  report.sigma_fixes_one = true;
  report.finalize();
  CHECK(report.verdict == SplittingReport::Verdict::VerifiedToBound);
  report.violations.push_back(
      {"x", Monomial::one(1), Polynomial::zero(ring), Polynomial::zero(ring)});
  report.finalize();
  CHECK(report.verdict == SplittingReport::Verdict::Refuted);
}

TEST_CASE("rewriting failures are reported, not dropped") {
  PolyRing uv({"u", "v"});
  QuotientRing target = QuotientRing::free(uv);
  MultiGrading action({{1, -1}});
  // u^2 v^2 alone cannot express the weight-zero element uv.
  SplittingSpec spec = SplittingSpec::make_weight_projection(
      target, action, {parse_polynomial("u^2*v^2", uv)});
  try {
    spec.evaluate(parse_polynomial("u*v", uv));
    FAIL("expected a rewriting failure");
  } catch (const AlgebraError& e) {
    CHECK(e.code() == Errc::RewritingFailure);
  }
}
