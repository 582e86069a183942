#include "summandlab/graded_rings.hpp"

#include <algorithm>

#include "summandlab/errors.hpp"

namespace summandlab {

namespace {

void enumerate_bounded(std::size_t arity, int bound, std::vector<int>& exps, std::size_t var,
                       std::vector<Monomial>& out) {
  if (var == arity) {
    out.push_back(Monomial(std::vector<int>(exps)));
    return;
  }
  for (int e = 0; e <= bound; ++e) {
    exps[var] = e;
    enumerate_bounded(arity, bound - e, exps, var + 1, out);
  }
  exps[var] = 0;
}

void enumerate_weighted(const std::vector<long>& weights, long remaining, std::vector<int>& exps,
                        std::size_t var, std::vector<Monomial>& out) {
  if (var == weights.size()) {
    if (remaining == 0) out.push_back(Monomial(std::vector<int>(exps)));
    return;
  }
  for (long e = 0; e * weights[var] <= remaining; ++e) {
    exps[var] = static_cast<int>(e);
    enumerate_weighted(weights, remaining - e * weights[var], exps, var + 1, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to_degree(std::size_t arity, int bound) {
  std::vector<Monomial> out;
  std::vector<int> exps(arity, 0);
  enumerate_bounded(arity, bound, exps, 0, out);
  std::sort(out.begin(), out.end(), grevlex_less);
  return out;
}

std::vector<Monomial> monomials_of_weighted_degree(const std::vector<long>& weights, long d) {
  for (long w : weights) {
    if (w <= 0) throw AlgebraError(Errc::BadParams, "weights must be positive");
  }
  std::vector<Monomial> out;
  std::vector<int> exps(weights.size(), 0);
  enumerate_weighted(weights, d, exps, 0, out);
  std::sort(out.begin(), out.end(), grevlex_less);
  return out;
}

std::size_t graded_piece_dimension(const QuotientRing& ring, const MultiGrading& grading,
                                   const DegreeVector& degree, int degree_bound) {
  if (!all_generators_homogeneous(ring.ideal(), grading)) {
    throw AlgebraError(Errc::InhomogeneousIdeal,
                       "graded piece of a quotient by an inhomogeneous ideal");
  }
  auto gb = reduced_groebner(ring.ideal(), MonomialOrder::degrevlex());
  std::size_t count = 0;
  for (const auto& m : monomials_up_to_degree(ring.ambient().arity(), degree_bound)) {
    if (grading.degree_of(m) != degree) continue;
    bool standard = std::none_of(gb->leading_monomials().begin(),
                                 gb->leading_monomials().end(),
                                 [&](const Monomial& lead) { return lead.divides(m); });
    if (standard) ++count;
  }
  return count;
}

VeronesePresentation veronese_presentation(std::size_t n_vars,
                                           const std::vector<long>& var_weights, long d) {
  if (var_weights.size() != n_vars) {
    throw AlgebraError(Errc::ArityMismatch, "need one weight per variable");
  }
  if (d < 1) throw AlgebraError(Errc::BadParams, "Veronese degree must be positive");

  std::vector<std::string> ambient_names;
  for (std::size_t i = 0; i < n_vars; ++i) ambient_names.push_back("u" + std::to_string(i + 1));
  PolyRing ambient(ambient_names);
  QuotientRing ambient_ring(ambient, Ideal::zero(ambient), MultiGrading({var_weights}));

  VeronesePresentation out;
  out.generators = monomials_of_weighted_degree(var_weights, d);

  std::vector<std::string> presented_names;
  for (std::size_t i = 0; i < out.generators.size(); ++i) {
    presented_names.push_back("V" + std::to_string(i + 1));
  }
  PolyRing presented_ambient(presented_names);

  std::vector<Polynomial> images;
  for (const auto& m : out.generators) {
    images.push_back(Polynomial::term(ambient, m, Scalar(1)));
  }
  RingMap free_map(QuotientRing::free(presented_ambient), ambient_ring, images);
  Ideal presentation = kernel(free_map);

  MultiGrading presented_grading({std::vector<long>(out.generators.size(), d)});
  out.presented = QuotientRing(presented_ambient, presentation, presented_grading);
  out.embedding = RingMap(out.presented, ambient_ring, images);
  return out;
}

}  // namespace summandlab
