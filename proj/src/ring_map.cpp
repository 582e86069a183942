#include "summandlab/ring_map.hpp"

#include <algorithm>
#include <numeric>

#include "summandlab/errors.hpp"

namespace summandlab {

RingMap::RingMap(QuotientRing source, QuotientRing target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.ambient().arity()) {
    throw AlgebraError(Errc::ArityMismatch, "ring map needs one image per source variable");
  }
  for (const auto& img : images_) {
    if (img.ring() != target_.ambient()) {
      throw AlgebraError(Errc::RingMismatch, "ring map image lives outside the target ring");
    }
  }
}

bool RingMap::is_monomial_map() const {
  return std::all_of(images_.begin(), images_.end(), [](const Polynomial& p) {
    return p.is_monomial() && p.terms().begin()->second == 1;
  });
}

const WellDefinedRow* WellDefinedCertificate::counterexample() const {
  for (const auto& row : rows) {
    if (!row.normal_form.is_zero()) return &row;
  }
  return nullptr;
}

WellDefinedCertificate check_well_defined(const RingMap& map) {
  WellDefinedCertificate cert;
  for (const auto& g : map.source().ideal().generators()) {
    Polynomial image = map.apply(g);
    Polynomial nf = map.target().reduce(image);
    cert.ok = cert.ok && nf.is_zero();
    cert.rows.push_back({g, image, nf});
  }
  return cert;
}

namespace {

// Combined ring [target variables | source variables]; source names are
// suffixed when they clash with target names.
struct GraphRing {
  PolyRing ring;
  std::vector<std::size_t> target_position;  // target var i -> combined index
  std::vector<std::size_t> source_position;  // source var i -> combined index
};

GraphRing graph_ring(const RingMap& map) {
  const PolyRing& target = map.target().ambient();
  const PolyRing& source = map.source().ambient();
  std::vector<std::string> names = target.variables();
  auto used = [&names](const std::string& n) {
    return std::find(names.begin(), names.end(), n) != names.end();
  };
  GraphRing g;
  g.target_position.resize(target.arity());
  std::iota(g.target_position.begin(), g.target_position.end(), 0);
  for (const auto& src_name : source.variables()) {
    std::string candidate = src_name;
    int suffix = 0;
    while (used(candidate)) candidate = src_name + "_" + std::to_string(suffix++);
    g.source_position.push_back(names.size());
    names.push_back(candidate);
  }
  g.ring = PolyRing(std::move(names));
  return g;
}

Polynomial embed(const Polynomial& p, const PolyRing& big,
                 const std::vector<std::size_t>& position) {
  Polynomial::TermMap terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(big.arity(), 0);
    for (std::size_t i = 0; i < position.size(); ++i) e[position[i]] = m[i];
    terms.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(big, std::move(terms));
}

Polynomial restrict_to(const Polynomial& p, const PolyRing& small,
                       const std::vector<std::size_t>& position) {
  Polynomial::TermMap terms;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> e(small.arity(), 0);
    int placed = 0;
    for (std::size_t i = 0; i < position.size(); ++i) {
      e[i] = m[position[i]];
      placed += e[i];
    }
    if (placed != m.total_degree()) {
      throw AlgebraError(Errc::BadParams, "polynomial not supported on the subring");
    }
    terms.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(small, std::move(terms));
}

// Contraction of (target ideal + extra) along the map: eliminate the target
// block from the graph ideal, then add the source ideal.
Ideal contract(const RingMap& map, const std::vector<Polynomial>& extra) {
  GraphRing g = graph_ring(map);
  std::vector<Polynomial> gens;
  for (const auto& q : map.target().ideal().generators()) {
    gens.push_back(embed(q, g.ring, g.target_position));
  }
  for (const auto& q : extra) gens.push_back(embed(q, g.ring, g.target_position));
  for (std::size_t i = 0; i < map.images().size(); ++i) {
    Polynomial xi = Polynomial::variable(g.ring, g.source_position[i]);
    gens.push_back(xi - embed(map.images()[i], g.ring, g.target_position));
  }
  std::vector<std::string> keep;
  for (std::size_t idx : g.source_position) keep.push_back(g.ring.variable(idx));
  Ideal eliminated = eliminate(Ideal(g.ring, std::move(gens)), keep);

  const PolyRing& source = map.source().ambient();
  std::vector<Polynomial> out = map.source().ideal().generators();
  for (const auto& p : eliminated.generators()) {
    out.push_back(restrict_to(p, source, g.source_position));
  }
  return Ideal(source, std::move(out));
}

}  // namespace

Ideal kernel(const RingMap& map) { return contract(map, {}); }

bool is_injective(const RingMap& map) {
  Ideal k = kernel(map);
  if (map.source().has_trivial_ideal()) {
    return k.is_zero_ideal() ||
           std::all_of(k.generators().begin(), k.generators().end(),
                       [](const Polynomial& g) { return g.is_zero(); });
  }
  return ideal_contains(map.source().ideal(), k);
}

Ideal preimage_ideal(const RingMap& map, const Ideal& target_ideal) {
  if (target_ideal.ring() != map.target().ambient()) {
    throw AlgebraError(Errc::RingMismatch, "contracted ideal lives outside the target ring");
  }
  return contract(map, target_ideal.generators());
}

ExpandContract expand_contract(const RingMap& map, const Ideal& ideal) {
  if (ideal.ring() != map.source().ambient()) {
    throw AlgebraError(Errc::RingMismatch, "ideal lives outside the source ring");
  }
  std::vector<Polynomial> expanded;
  for (const auto& g : ideal.generators()) expanded.push_back(map.apply(g));
  ExpandContract result;
  result.contraction = contract(map, expanded);
  Ideal reference = ideal.plus(map.source().ideal());
  for (const auto& g : result.contraction.generators()) {
    if (!contains(g, reference)) {
      result.holds = false;
      result.witness = g;
      break;
    }
  }
  return result;
}

ModuleFiniteness is_module_finite_graded(const RingMap& map) {
  const auto& sg = map.source().grading();
  const auto& tg = map.target().grading();
  if (!sg || !tg || sg->rank() != 1 || tg->rank() != 1) {
    throw AlgebraError(Errc::NotPositivelyGraded,
                       "module-finiteness needs rank-1 gradings on both rings");
  }
  auto positive = [](const MultiGrading& g) {
    return std::all_of(g.rows()[0].begin(), g.rows()[0].end(), [](long w) { return w > 0; });
  };
  if (!positive(*sg) || !positive(*tg)) {
    throw AlgebraError(Errc::NotPositivelyGraded, "gradings must be strictly positive");
  }
  for (std::size_t i = 0; i < map.images().size(); ++i) {
    auto check = homogeneous_degree(map.images()[i], *tg);
    if (!check.homogeneous() ||
        (!map.images()[i].is_zero() && (*check.degree)[0] != sg->rows()[0][i])) {
      throw AlgebraError(Errc::NotPositivelyGraded,
                         "map is not degree-preserving on variable " +
                             map.source().ambient().variable(i));
    }
  }
  Ideal q = map.target().ideal();
  for (const auto& img : map.images()) q = q.plus(img);
  ModuleFiniteness out;
  out.finite = is_zero_dimensional(q);
  if (out.finite) {
    out.basis = standard_monomials(q);
    out.dimension = out.basis.size();
  }
  return out;
}

RingMap descend_to_quotient(const RingMap& map, const Ideal& ideal) {
  ExpandContract ec = expand_contract(map, ideal);
  if (!ec.holds) {
    throw AlgebraError(Errc::ContractionHypothesisFails,
                       "expanding and contracting the ideal yields new elements",
                       ec.witness ? ec.witness->to_string() : "");
  }
  std::vector<Polynomial> expanded;
  for (const auto& g : ideal.generators()) expanded.push_back(map.apply(g));

  Ideal new_source_ideal = map.source().ideal().plus(ideal);
  Ideal new_target_ideal = map.target().ideal().plus(Ideal(map.target().ambient(), expanded));

  auto keep_grading = [](const std::optional<MultiGrading>& g, const Ideal& i) {
    return (g && all_generators_homogeneous(i, *g)) ? g : std::nullopt;
  };
  QuotientRing new_source(map.source().ambient(), new_source_ideal,
                          keep_grading(map.source().grading(), new_source_ideal));
  QuotientRing new_target(map.target().ambient(), new_target_ideal,
                          keep_grading(map.target().grading(), new_target_ideal));
  return RingMap(new_source, new_target, map.images());
}

RingMap compose(const RingMap& phi, const RingMap& psi) {
  if (!phi.target().same_presentation(psi.source())) {
    throw AlgebraError(Errc::CompositionMismatch,
                       "inner target does not match outer source presentation");
  }
  std::vector<Polynomial> images;
  images.reserve(phi.images().size());
  for (const auto& img : phi.images()) images.push_back(psi.apply(img));
  return RingMap(phi.source(), psi.target(), std::move(images));
}

}  // namespace summandlab
