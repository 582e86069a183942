#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "summandlab/errors.hpp"
#include "summandlab/groebner.hpp"
#include "summandlab/parser.hpp"

using namespace summandlab;

namespace {

Ideal ideal_of(const PolyRing& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> gens;
  for (const auto& t : texts) gens.push_back(parse_polynomial(t, ring));
  return Ideal(ring, gens);
}

Polynomial rand_poly(const PolyRing& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(0, 2);
  std::uniform_int_distribution<int> coef(-3, 3);
  Polynomial p = Polynomial::zero(ring);
  int terms = 1 + static_cast<int>(rng() % 3);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(ring.arity());
    for (auto& x : e) x = exp(rng);
    p = p + Polynomial::term(ring, Monomial(e), Scalar(coef(rng)));
  }
  return p;
}

}  // namespace

TEST_CASE("reduced basis of the Veronese graph ideal finds the conic relation") {
  PolyRing ring({"u", "v", "x", "y", "z"});
  Ideal graph = ideal_of(ring, {"x - u^2", "y - u*v", "z - v^2"});
  Ideal conic = eliminate(graph, {"x", "y", "z"});
  Polynomial rel = parse_polynomial("x*z - y^2", ring);
  CHECK(contains(rel, conic));
  CHECK(contains(rel, graph));
  bool found = std::any_of(conic.generators().begin(), conic.generators().end(),
                           [&](const Polynomial& g) {
                             return g == rel || g == -rel;
                           });
  CHECK(found);
}

TEST_CASE("zero ideal has an empty basis") {
  PolyRing ring({"x", "y"});
  auto gb = reduced_groebner(Ideal::zero(ring), MonomialOrder::degrevlex());
  CHECK(gb->basis().empty());
  CHECK(normal_form(parse_polynomial("x + y", ring), *gb) == parse_polynomial("x + y", ring));
}

TEST_CASE("monomial ideal already reduced") {
  PolyRing ring({"x", "y"});
  auto gb = reduced_groebner(ideal_of(ring, {"x^2", "x*y"}), MonomialOrder::lex());
  REQUIRE(gb->basis().size() == 2);
  CHECK(contains(parse_polynomial("x^2", ring), gb->ideal()));
  CHECK(contains(parse_polynomial("x*y", ring), gb->ideal()));
  CHECK(buchberger_certificate(*gb));
}

TEST_CASE("normal forms") {
  PolyRing ring({"x", "y", "z"});
  Ideal conic = ideal_of(ring, {"x*z - y^2"});

  // Membership of each generator.
  auto gb = reduced_groebner(conic, MonomialOrder::degrevlex());
  for (const auto& g : conic.generators()) CHECK(normal_form(g, *gb).is_zero());

  // Proper ideal keeps 1.
  CHECK(normal_form(Polynomial::constant(ring, Scalar(1)), *gb) ==
        Polynomial::constant(ring, Scalar(1)));

  // Under degrevlex the leading monomial of xz - y^2 is y^2, so x^2*z is
  // already reduced; under lex it rewrites to x*y^2.
  Polynomial p = parse_polynomial("x^2*z", ring);
  CHECK(normal_form(p, *gb) == p);
  auto gb_lex = reduced_groebner(conic, MonomialOrder::lex());
  CHECK(normal_form(p, *gb_lex) == parse_polynomial("x*y^2", ring));
}

TEST_CASE("containment") {
  PolyRing ring({"x", "y"});
  CHECK(!contains(parse_polynomial("x", ring), ideal_of(ring, {"x^2"})));
  CHECK(contains(parse_polynomial("y^2", ring), ideal_of(ring, {"x", "y^2 - x"})));
  // The zero polynomial lies in the zero ideal.
  CHECK(contains(Polynomial::zero(ring), Ideal::zero(ring)));
}

TEST_CASE("elimination") {
  PolyRing segre({"u", "v", "s", "t", "x", "y", "z", "w"});
  Ideal graph = ideal_of(segre, {"x - u*s", "y - u*t", "z - v*s", "w - v*t"});
  Ideal quadric = eliminate(graph, {"x", "y", "z", "w"});
  REQUIRE(quadric.generators().size() == 1);
  Polynomial g = quadric.generators()[0];
  Polynomial expected = parse_polynomial("x*w - y*z", segre);
  CHECK((g == expected || g == -expected));

  // Eliminating nothing returns the same ideal.
  PolyRing xy({"x", "y"});
  Ideal original = ideal_of(xy, {"x^2 - y"});
  CHECK(ideal_equals(eliminate(original, {"x", "y"}), original));

  // Cusp parametrization.
  PolyRing cusp({"u", "x", "y"});
  Ideal cusp_graph = ideal_of(cusp, {"x - u^2", "y - u^3"});
  Ideal cusp_curve = eliminate(cusp_graph, {"x", "y"});
  Polynomial rel = parse_polynomial("x^3 - y^2", cusp);
  CHECK(contains(rel, cusp_curve));
  for (const auto& gen : cusp_curve.generators()) {
    CHECK(contains(gen, ideal_of(cusp, {"x^3 - y^2"})));
  }
}

TEST_CASE("colon ideals") {
  PolyRing xy({"x", "y"});
  CHECK(ideal_equals(colon_ideal(ideal_of(xy, {"x^2"}), ideal_of(xy, {"x"})),
                     ideal_of(xy, {"x"})));
  CHECK(ideal_equals(colon_ideal(ideal_of(xy, {"x*y"}), ideal_of(xy, {"y"})),
                     ideal_of(xy, {"x"})));
  // ((x^3, y^2) cap (x-1)) : (x-1) recovers (x^3, y^2).
  Ideal box = ideal_of(xy, {"x^3", "y^2"});
  Ideal shifted = intersect(box, ideal_of(xy, {"x - 1"}));
  CHECK(ideal_equals(colon_ideal(shifted, ideal_of(xy, {"x - 1"})), box));
}

TEST_CASE("saturation") {
  PolyRing xy({"x", "y"});
  CHECK(ideal_equals(saturate(ideal_of(xy, {"x^2*y"}), ideal_of(xy, {"x"})),
                     ideal_of(xy, {"y"})));
  Ideal original = ideal_of(xy, {"x^2 - y"});
  CHECK(ideal_equals(saturate(original, Ideal::unit(xy)), original));

  // Jacobian of y^3 + x^2 + yz saturated at the maximal ideal exhausts it.
  PolyRing xyz({"x", "y", "z"});
  Ideal jac = ideal_of(xyz, {"2*x", "3*y^2 + z", "y"});
  Ideal sat = saturate(jac, ideal_of(xyz, {"x", "y", "z"}));
  CHECK(contains(Polynomial::constant(xyz, Scalar(1)), sat));

  // Saturation is idempotent.
  Ideal once = saturate(ideal_of(xy, {"x^3*y^2"}), ideal_of(xy, {"x"}));
  CHECK(ideal_equals(saturate(once, ideal_of(xy, {"x"})), once));
}

TEST_CASE("zero-dimensional vector space dimensions") {
  PolyRing xyz({"x", "y", "z"});
  CHECK(zero_dim_vector_dimension(ideal_of(xyz, {"x", "y^2", "z"})) == 2);
  CHECK(zero_dim_vector_dimension(ideal_of(xyz, {"3*x^2", "z", "y"})) == 2);

  PolyRing xy({"x", "y"});
  CHECK(zero_dim_vector_dimension(ideal_of(xy, {"x^3", "y^2"})) == 6);

  CHECK_THROWS_AS(zero_dim_vector_dimension(ideal_of(xy, {"x"})), AlgebraError);
  CHECK(is_zero_dimensional(Ideal::unit(xy)));
  CHECK(zero_dim_vector_dimension(Ideal::unit(xy)) == 0);
}

TEST_CASE("rational points of zero-dimensional ideals") {
  PolyRing xy({"x", "y"});
  auto pts = rational_points_zero_dim(ideal_of(xy, {"x", "y - 1"}));
  REQUIRE(pts.points.size() == 1);
  CHECK(pts.points[0] == std::vector<Scalar>{Scalar(0), Scalar(1)});
  CHECK(pts.complete);

  // Singular locus of x^3 - yz in the chart w = 1: only the origin, with the
  // remaining coordinate points living in other charts.
  PolyRing xyz({"x", "y", "z"});
  auto sing = rational_points_zero_dim(ideal_of(xyz, {"3*x^2", "-1*z", "-1*y", "x^3 - y*z"}));
  REQUIRE(sing.points.size() == 1);
  CHECK(sing.points[0] == std::vector<Scalar>{Scalar(0), Scalar(0), Scalar(0)});
  CHECK(sing.complete);

  // x^2 + 1: no rational roots, and the accounting notices.
  PolyRing x1({"x"});
  auto none = rational_points_zero_dim(ideal_of(x1, {"x^2 + 1"}));
  CHECK(none.points.empty());
  CHECK(!none.complete);

  // Mixed: one rational point plus a non-rational pair.
  auto mixed = rational_points_zero_dim(ideal_of(x1, {"(x - 2)*(x^2 + 1)"}));
  REQUIRE(mixed.points.size() == 1);
  CHECK(mixed.points[0][0] == 2);
  CHECK(!mixed.complete);

  // Fractional coordinates.
  auto frac = rational_points_zero_dim(ideal_of(xy, {"2*x - 1", "3*y + 2"}));
  REQUIRE(frac.points.size() == 1);
  CHECK(frac.points[0] == std::vector<Scalar>{scalar_of(1, 2), scalar_of(-2, 3)});
}

TEST_CASE("reduced bases are unique under generator permutation") {
  std::mt19937 rng(314159);
  PolyRing ring({"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> gens;
    int count = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < count; ++i) gens.push_back(rand_poly(ring, rng));
    Ideal a(ring, gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    // Scale a generator by a unit; the reduced basis must not move.
    if (!gens.empty() && !gens[0].is_zero()) gens[0] = gens[0].scaled(scalar_of(3, 7));
    Ideal b(ring, gens);
    auto ga = reduced_groebner(a, MonomialOrder::degrevlex());
    auto gb = reduced_groebner(b, MonomialOrder::degrevlex());
    CHECK(ga->basis() == gb->basis());
  }
}

TEST_CASE("normal form is idempotent") {
  std::mt19937 rng(2024);
  PolyRing ring({"x", "y", "z"});
  int cases = 0;
  while (cases < 100) {
    std::vector<Polynomial> gens = {rand_poly(ring, rng), rand_poly(ring, rng)};
    Ideal ideal(ring, gens);
    auto gb = reduced_groebner(ideal, MonomialOrder::degrevlex());
    Polynomial p = rand_poly(ring, rng);
    Polynomial once = normal_form(p, *gb);
    CHECK(normal_form(once, *gb) == once);
    ++cases;
  }
}

TEST_CASE("buchberger certificate holds for assorted bases") {
  PolyRing ring({"x", "y", "z"});
  for (const auto& gens : std::vector<std::vector<std::string>>{
           {"x*z - y^2"},
           {"x^2 + y", "y^2 + z", "z^2 + x"},
           {"x*y - z", "y*z - x"},
       }) {
    auto gb = reduced_groebner(ideal_of(ring, gens), MonomialOrder::degrevlex());
    CHECK(buchberger_certificate(*gb));
  }
}

TEST_CASE("elimination agrees with a substitution oracle on monomial maps") {
  std::mt19937 rng(777);
  PolyRing target({"s", "t"});
  for (int trial = 0; trial < 12; ++trial) {
    // Random monomial images for a 3-variable source.
    std::vector<Polynomial> images;
    std::vector<std::string> names = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) {
      std::vector<int> e(2);
      e[0] = 1 + static_cast<int>(rng() % 2);
      e[1] = static_cast<int>(rng() % 3);
      images.push_back(Polynomial::term(target, Monomial(e), Scalar(1)));
    }
    PolyRing graph_ring({"s", "t", "x", "y", "z"});
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) {
      Polynomial::TermMap lift;
      for (const auto& [m, c] : images[i].terms()) {
        lift.emplace(Monomial({m[0], m[1], 0, 0, 0}), c);
      }
      gens.push_back(Polynomial::variable(graph_ring, 2 + i) -
                     Polynomial(graph_ring, std::move(lift)));
    }
    Ideal kernel_ideal = eliminate(Ideal(graph_ring, gens), {"x", "y", "z"});
    // Oracle: every kernel generator must vanish under substitution.
    std::vector<Polynomial> subst = {
        Polynomial::variable(target, 0), Polynomial::variable(target, 1),
        images[0], images[1], images[2]};
    for (const auto& g : kernel_ideal.generators()) {
      CHECK(g.substitute(subst).is_zero());
    }
  }
}

TEST_CASE("block elimination order dominates on the first block") {
  // Over (u, v, x, y, z) with the first two variables eliminated, any monomial
  // touching u or v beats any monomial in x, y, z alone.
  MonomialOrder block = MonomialOrder::block_elimination(2);
  Monomial u = Monomial::variable(5, 0);
  Monomial y5 = Monomial::variable(5, 3, 5);
  CHECK(block.less(y5, u));
  CHECK(!block.less(u, y5));

  PolyRing ring({"u", "v", "x", "y", "z"});
  Ideal graph = ideal_of(ring, {"x - u^2", "y - u*v", "z - v^2"});
  auto gb = reduced_groebner(graph, block);
  Polynomial rel = parse_polynomial("x*z - y^2", ring);
  bool found = false;
  for (const auto& g : gb->basis()) {
    if (g == rel || g == -rel) found = true;
  }
  CHECK(found);
}

TEST_CASE("weight-refined order with lex tiebreak") {
  MonomialOrder order = MonomialOrder::weight_refined({1, 1}, MonomialOrder::Tiebreak::Lex);
  Monomial x = Monomial::variable(2, 0);
  Monomial y = Monomial::variable(2, 1);
  CHECK(order.less(y, x));          // equal weight, lex tiebreak
  CHECK(order.less(x, y.power(2))); // weight dominates
}

TEST_CASE("basis computations are cached per ideal and order") {
  PolyRing ring({"x", "y"});
  Ideal ideal = ideal_of(ring, {"x^2 - y", "y^2 - x"});
  auto first = reduced_groebner(ideal, MonomialOrder::degrevlex());
  auto second = reduced_groebner(ideal, MonomialOrder::degrevlex());
  CHECK(first.get() == second.get());
  auto lex = reduced_groebner(ideal, MonomialOrder::lex());
  CHECK(first.get() != lex.get());
}

TEST_CASE("the S-pair budget aborts loudly") {
  setenv("SUMMANDLAB_GB_BUDGET", "1", 1);
  PolyRing ring({"x", "y", "z"});
  // Fresh generators so the cache cannot satisfy the request.
  Ideal hard = ideal_of(ring, {"x^3 - y*z + 17", "y^3 - x*z + 17", "z^3 - x*y + 17"});
  try {
    reduced_groebner(hard, MonomialOrder::lex());
    unsetenv("SUMMANDLAB_GB_BUDGET");
    FAIL("expected the budget to trip");
  } catch (const AlgebraError& e) {
    unsetenv("SUMMANDLAB_GB_BUDGET");
    CHECK(e.code() == Errc::BudgetExceeded);
  }
}

TEST_CASE("concurrent reads of the basis cache") {
  PolyRing ring({"x", "y", "z"});
  std::vector<std::thread> workers;
  std::atomic<int> successes{0};
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&ring, &successes, t] {
      Ideal ideal(ring, {parse_polynomial("x*z - y^2", ring),
                         parse_polynomial("x^2 - " + std::to_string(1 + t % 3) + "*y", ring)});
      auto gb = reduced_groebner(ideal, MonomialOrder::degrevlex());
      Polynomial probe = parse_polynomial("x^2*z^2", ring);
      Polynomial nf = normal_form(probe, *gb);
      if (normal_form(nf, *gb) == nf) ++successes;
    });
  }
  for (auto& w : workers) w.join();
  CHECK(successes == 8);
}
