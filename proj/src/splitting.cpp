#include "summandlab/splitting.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>

#include "summandlab/errors.hpp"
#include "summandlab/graded_rings.hpp"

namespace summandlab {

int default_degree_bound() {
  if (const char* env = std::getenv("SUMMANDLAB_DEGREE_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 64) return static_cast<int>(v);
  }
  return 8;
}

namespace {

std::string monomial_string(const PolyRing& ring, const Monomial& m) {
  return Polynomial::term(ring, m, Scalar(1)).to_string();
}

ZVec to_zvec(const Monomial& m) {
  ZVec v(m.arity());
  for (std::size_t i = 0; i < m.arity(); ++i) v[i] = Integer(m[i]);
  return v;
}

// Lexicographically smallest nonnegative integer combination of the image
// exponents equal to target, if one exists. Complete search: coordinates are
// bounded by the target exponent, so the recursion tree is finite.
bool factorize_exponent(const std::vector<ZVec>& images, std::size_t next, ZVec& remaining,
                        std::vector<int>& combo) {
  if (std::all_of(remaining.begin(), remaining.end(),
                  [](const Integer& x) { return x == 0; })) {
    std::fill(combo.begin() + next, combo.end(), 0);
    return true;
  }
  if (next == images.size()) return false;
  // Maximum multiplicity of this image inside the remaining exponent.
  long cap = -1;
  for (std::size_t j = 0; j < remaining.size(); ++j) {
    if (images[next][j] > 0) {
      long q = Integer(remaining[j] / images[next][j]).get_si();
      cap = (cap < 0) ? q : std::min(cap, q);
    }
  }
  if (cap < 0) cap = 0;
  for (long c = 0; c <= cap; ++c) {
    combo[next] = static_cast<int>(c);
    bool feasible = true;
    for (std::size_t j = 0; j < remaining.size() && feasible; ++j) {
      if (remaining[j] < c * images[next][j]) feasible = false;
    }
    if (!feasible) break;
    ZVec rest = remaining;
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= c * images[next][j];
    if (factorize_exponent(images, next + 1, rest, combo)) return true;
  }
  combo[next] = 0;
  return false;
}

std::optional<std::vector<int>> factorize(const std::vector<ZVec>& images, const ZVec& target) {
  std::vector<int> combo(images.size(), 0);
  ZVec remaining = target;
  if (factorize_exponent(images, 0, remaining, combo)) return combo;
  return std::nullopt;
}

}  // namespace

Polynomial SplittingSpec::evaluate_monoid(const Polynomial& p) const {
  const PolyRing& source = map_.source().ambient();
  Polynomial acc = Polynomial::zero(source);
  for (const auto& [m, c] : p.terms()) {
    ZVec e = to_zvec(m);
    if (!lattice_contains(monoid_->lattice_hnf, e)) continue;
    auto combo = factorize(monoid_->image_exponents, e);
    if (!combo) {
      throw AlgebraError(Errc::FullnessFailure,
                         "lattice monomial outside the image semigroup",
                         monomial_string(p.ring(), m));
    }
    std::vector<int> exps(source.arity());
    for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = (*combo)[i];
    acc = acc + Polynomial::term(source, Monomial(std::move(exps)), c);
  }
  if (monoid_->rewriting_gb) acc = normal_form(acc, *monoid_->rewriting_gb);
  return map_.source().reduce(acc);
}

Polynomial SplittingSpec::evaluate_weight(const Polynomial& p) const {
  const WeightData& w = *weight_;
  const PolyRing& source = map_.source().ambient();
  // Keep the weight-zero terms.
  Polynomial::TermMap kept;
  for (const auto& [m, c] : p.terms()) {
    DegreeVector d = w.action.degree_of(m);
    if (std::all_of(d.begin(), d.end(), [](long x) { return x == 0; })) kept.emplace(m, c);
  }
  Polynomial zero_part(p.ring(), std::move(kept));
  // Rewrite in the tagged generators by normal form under the elimination order.
  Polynomial::TermMap lifted;
  for (const auto& [m, c] : zero_part.terms()) {
    std::vector<int> e(w.combined.arity(), 0);
    for (std::size_t i = 0; i < w.target_position.size(); ++i) e[w.target_position[i]] = m[i];
    lifted.emplace(Monomial(std::move(e)), c);
  }
  Polynomial nf = normal_form(Polynomial(w.combined, std::move(lifted)), *w.rewrite_gb);
  Polynomial::TermMap restricted;
  for (const auto& [m, c] : nf.terms()) {
    std::vector<int> e(source.arity(), 0);
    int placed = 0;
    for (std::size_t i = 0; i < w.source_position.size(); ++i) {
      e[i] = m[w.source_position[i]];
      placed += e[i];
    }
    if (placed != m.total_degree()) {
      throw AlgebraError(Errc::RewritingFailure,
                         "weight-zero element not expressible in the invariant generators",
                         nf.to_string());
    }
    restricted.emplace(Monomial(std::move(e)), c);
  }
  return map_.source().reduce(Polynomial(source, std::move(restricted)));
}

Polynomial SplittingSpec::evaluate(const Polynomial& target_element) const {
  if (target_element.ring() != map_.target().ambient()) {
    throw AlgebraError(Errc::RingMismatch, "splitting applied outside its target ring");
  }
  switch (kind_) {
    case SplittingKind::SemigroupProjection:
    case SplittingKind::TraceSplit:
      return evaluate_monoid(target_element);
    case SplittingKind::WeightProjection:
      return evaluate_weight(target_element);
    case SplittingKind::Compose: {
      Polynomial mid = compose_->outer->evaluate(target_element);
      return compose_->inner->evaluate(mid);
    }
    case SplittingKind::QuotientDescent: {
      Polynomial value = descent_->parent->evaluate(target_element);
      return map_.source().reduce(value);
    }
  }
  throw AlgebraError(Errc::BadParams, "unhandled splitting kind");
}

namespace {

struct MonoidSetup {
  std::vector<ZVec> image_exponents;
  ZMat lattice_hnf;
};

MonoidSetup monoid_setup(const RingMap& map) {
  if (!map.is_monomial_map()) {
    throw AlgebraError(Errc::NotMonomialMap, "splitting requires a monomial map");
  }
  MonoidSetup setup;
  for (const auto& img : map.images()) {
    const Monomial& m = img.terms().begin()->first;
    if (m.is_one()) {
      throw AlgebraError(Errc::NotMonomialMap, "images must be nonconstant monomials");
    }
    setup.image_exponents.push_back(to_zvec(m));
  }
  setup.lattice_hnf = hermite_normal_form(ZMat(setup.image_exponents));
  return setup;
}

void check_fullness(const RingMap& map, const MonoidSetup& setup, int bound) {
  for (const auto& m : monomials_up_to_degree(map.target().ambient().arity(), bound)) {
    if (m.is_one()) continue;
    ZVec e = to_zvec(m);
    if (!lattice_contains(setup.lattice_hnf, e)) continue;
    if (!factorize(setup.image_exponents, e)) {
      throw AlgebraError(Errc::FullnessFailure,
                         "lattice point with no semigroup factorization",
                         monomial_string(map.target().ambient(), m));
    }
  }
}

}  // namespace

SplittingSpec SplittingSpec::make_semigroup_projection(const RingMap& map, int fullness_bound) {
  if (fullness_bound <= 0) fullness_bound = default_degree_bound();
  MonoidSetup setup = monoid_setup(map);
  check_fullness(map, setup, fullness_bound);

  auto data = std::make_shared<MonoidData>();
  data->image_exponents = std::move(setup.image_exponents);
  data->lattice_hnf = std::move(setup.lattice_hnf);
  data->rewriting_gb = reduced_groebner(kernel(map), MonomialOrder::degrevlex());

  SplittingSpec spec;
  spec.kind_ = SplittingKind::SemigroupProjection;
  spec.map_ = map;
  spec.monoid_ = std::move(data);
  return spec;
}

SplittingSpec SplittingSpec::make_trace_split(const RingMap& map, int fullness_bound) {
  if (fullness_bound <= 0) fullness_bound = default_degree_bound();
  MonoidSetup setup = monoid_setup(map);
  if (!is_injective(map)) {
    throw AlgebraError(Errc::NotWellDefined, "trace splitting needs an injective map");
  }
  std::size_t m_arity = map.target().ambient().arity();
  Integer index = lattice_index(setup.lattice_hnf, m_arity);
  if (index == 0) {
    throw AlgebraError(Errc::InfiniteBasis,
                       "image lattice has infinite index; no finite coset basis");
  }
  if (index < 0) index = -index;

  // Coset monomial basis: lowest-degree representative per residue class.
  std::map<std::string, Monomial> reps;
  for (int degree = 0; static_cast<long>(reps.size()) < index.get_si(); ++degree) {
    if (degree > 100) {
      throw AlgebraError(Errc::InfiniteBasis, "coset representative search did not close");
    }
    for (const auto& m : monomials_up_to_degree(m_arity, degree)) {
      if (m.total_degree() != degree) continue;
      ZVec residue = lattice_reduce(setup.lattice_hnf, to_zvec(m));
      std::string key;
      for (const auto& r : residue) key += r.get_str() + ",";
      reps.emplace(key, m);
    }
  }

  check_fullness(map, setup, fullness_bound);

  auto data = std::make_shared<MonoidData>();
  data->image_exponents = std::move(setup.image_exponents);
  data->lattice_hnf = std::move(setup.lattice_hnf);
  data->rewriting_gb = reduced_groebner(kernel(map), MonomialOrder::degrevlex());
  data->rank = index;
  for (const auto& [key, m] : reps) data->basis.push_back(m);
  std::sort(data->basis.begin(), data->basis.end(), grevlex_less);
  if (Integer(static_cast<long>(data->basis.size())) != index) {
    throw AlgebraError(Errc::InfiniteBasis, "coset count disagrees with lattice index");
  }

  SplittingSpec spec;
  spec.kind_ = SplittingKind::TraceSplit;
  spec.map_ = map;
  spec.monoid_ = std::move(data);
  return spec;
}

const Integer& SplittingSpec::trace_rank() const {
  if (kind_ != SplittingKind::TraceSplit || !monoid_) {
    throw AlgebraError(Errc::BadParams, "trace certificate only exists for trace splittings");
  }
  return monoid_->rank;
}

const std::vector<Monomial>& SplittingSpec::trace_basis() const {
  if (kind_ != SplittingKind::TraceSplit || !monoid_) {
    throw AlgebraError(Errc::BadParams, "trace certificate only exists for trace splittings");
  }
  return monoid_->basis;
}

SplittingSpec SplittingSpec::make_weight_projection(
    const QuotientRing& target, const MultiGrading& action,
    const std::vector<Polynomial>& invariant_generators) {
  if (action.arity() != target.ambient().arity()) {
    throw AlgebraError(Errc::ArityMismatch, "action arity does not match the ring");
  }
  if (!all_generators_homogeneous(target.ideal(), action)) {
    throw AlgebraError(Errc::InhomogeneousIdeal,
                       "defining ideal is not homogeneous under the action");
  }
  for (const auto& g : invariant_generators) {
    auto check = homogeneous_degree(g, action);
    bool zero_weight = check.homogeneous() &&
                       std::all_of(check.degree->begin(), check.degree->end(),
                                   [](long x) { return x == 0; });
    if (!zero_weight) {
      throw AlgebraError(Errc::GeneratorNotInvariant,
                         "generator is not invariant under the action", g.to_string());
    }
  }

  // Presented source ring on tag variables V1..Vk.
  std::vector<std::string> names;
  for (std::size_t i = 0; i < invariant_generators.size(); ++i) {
    names.push_back("V" + std::to_string(i + 1));
  }
  PolyRing source_ambient(names);
  RingMap free_map(QuotientRing::free(source_ambient), target, invariant_generators);
  Ideal presentation = kernel(free_map);
  QuotientRing source(source_ambient, presentation);
  RingMap map(source, target, invariant_generators);

  // Combined rewriting ring [target vars | V vars] with the relations g_i - V_i.
  auto data = std::make_shared<WeightData>();
  data->action = action;
  std::vector<std::string> combined = target.ambient().variables();
  auto used = [&combined](const std::string& n) {
    return std::find(combined.begin(), combined.end(), n) != combined.end();
  };
  data->target_position.resize(target.ambient().arity());
  std::iota(data->target_position.begin(), data->target_position.end(), 0);
  for (const auto& n : names) {
    std::string candidate = n;
    int suffix = 0;
    while (used(candidate)) candidate = n + "_" + std::to_string(suffix++);
    data->source_position.push_back(combined.size());
    combined.push_back(candidate);
  }
  data->combined = PolyRing(combined);

  std::vector<Polynomial> relations;
  auto lift = [&](const Polynomial& p) {
    Polynomial::TermMap terms;
    for (const auto& [m, c] : p.terms()) {
      std::vector<int> e(data->combined.arity(), 0);
      for (std::size_t i = 0; i < data->target_position.size(); ++i) {
        e[data->target_position[i]] = m[i];
      }
      terms.emplace(Monomial(std::move(e)), c);
    }
    return Polynomial(data->combined, std::move(terms));
  };
  for (const auto& q : target.ideal().generators()) relations.push_back(lift(q));
  for (std::size_t i = 0; i < invariant_generators.size(); ++i) {
    relations.push_back(lift(invariant_generators[i]) -
                        Polynomial::variable(data->combined, data->source_position[i]));
  }
  std::vector<bool> elim(data->combined.arity(), false);
  for (std::size_t idx : data->target_position) elim[idx] = true;
  data->rewrite_gb =
      reduced_groebner(Ideal(data->combined, relations), MonomialOrder::eliminating(elim));

  SplittingSpec spec;
  spec.kind_ = SplittingKind::WeightProjection;
  spec.map_ = map;
  spec.weight_ = std::move(data);
  return spec;
}

SplittingSpec SplittingSpec::compose_splittings(const SplittingSpec& inner,
                                                const SplittingSpec& outer) {
  if (!inner.map().target().same_presentation(outer.map().source())) {
    throw AlgebraError(Errc::CompositionMismatch,
                       "inner target and outer source presentations differ");
  }
  SplittingSpec spec;
  spec.kind_ = SplittingKind::Compose;
  spec.map_ = compose(inner.map(), outer.map());
  auto data = std::make_shared<ComposeData>();
  data->inner = std::make_shared<const SplittingSpec>(inner);
  data->outer = std::make_shared<const SplittingSpec>(outer);
  spec.compose_ = std::move(data);
  return spec;
}

SplittingSpec SplittingSpec::descend_splitting(const SplittingSpec& spec, const Ideal& ideal,
                                               int check_bound) {
  RingMap descended = descend_to_quotient(spec.map(), ideal);  // verifies IS cap R = I

  // Re-verify sigma's well-definedness on the quotient: multiples of the
  // expanded ideal must land in I (modulo the source ideal).
  Ideal target_side(spec.map().target().ambient());
  {
    std::vector<Polynomial> expanded;
    for (const auto& g : ideal.generators()) expanded.push_back(spec.map().apply(g));
    target_side = Ideal(spec.map().target().ambient(), expanded);
  }
  Ideal source_reference = descended.source().ideal();
  for (const auto& g : target_side.generators()) {
    for (const auto& s :
         monomials_up_to_degree(spec.map().target().ambient().arity(), check_bound)) {
      Polynomial value = spec.evaluate(
          g * Polynomial::term(spec.map().target().ambient(), s, Scalar(1)));
      if (!contains(value, source_reference)) {
        throw AlgebraError(Errc::NotWellDefined,
                           "sigma does not descend: image of an ideal multiple leaves I",
                           value.to_string());
      }
    }
  }

  SplittingSpec out;
  out.kind_ = SplittingKind::QuotientDescent;
  out.map_ = descended;
  auto data = std::make_shared<DescentData>();
  data->parent = std::make_shared<const SplittingSpec>(spec);
  data->ideal = ideal;
  out.descent_ = std::move(data);
  return out;
}

SplittingReport verify_splitting(const RingMap& map, const SplittingSpec& spec,
                                 int degree_bound) {
  if (degree_bound <= 0) degree_bound = default_degree_bound();
  const PolyRing& target = map.target().ambient();
  const PolyRing& source = map.source().ambient();
  if (spec.map().target().ambient() != target || spec.map().source().ambient() != source) {
    throw AlgebraError(Errc::RingMismatch, "splitting does not match the map's rings");
  }

  SplittingReport report;
  report.degree_bound = degree_bound;
  Polynomial one = Polynomial::constant(target, Scalar(1));
  report.sigma_of_one = spec.evaluate(one);
  report.sigma_fixes_one =
      map.source().same_class(report.sigma_of_one, Polynomial::constant(source, Scalar(1)));

  std::vector<Monomial> spanning = monomials_up_to_degree(target.arity(), degree_bound);
  for (std::size_t i = 0; i < source.arity(); ++i) {
    const Polynomial& image = map.images()[i];
    Polynomial xi = Polynomial::variable(source, i);
    for (const auto& m : spanning) {
      Polynomial mono = Polynomial::term(target, m, Scalar(1));
      Polynomial lhs = spec.evaluate(image * mono);
      Polynomial rhs = xi * spec.evaluate(mono);
      if (!map.source().same_class(lhs, rhs)) {
        report.violations.push_back({source.variable(i), m, lhs, map.source().reduce(rhs)});
      }
    }
  }
  report.finalize();
  return report;
}

}  // namespace summandlab
