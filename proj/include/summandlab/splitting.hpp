#pragma once

#include <memory>

#include "summandlab/int_linalg.hpp"
#include "summandlab/ring_map.hpp"

namespace summandlab {

enum class SplittingKind {
  SemigroupProjection,
  WeightProjection,
  TraceSplit,
  Compose,
  QuotientDescent,
};

// Executable source-linear retraction sigma for the inclusion carried by a
// RingMap. Evaluation takes an element of the target ambient ring to its
// sigma-image in the source ambient ring, reduced modulo the source ideal.
class SplittingSpec {
 public:
  SplittingKind kind() const { return kind_; }
  const RingMap& map() const { return map_; }
  Polynomial evaluate(const Polynomial& target_element) const;

  // Monomial inclusion: a target monomial goes to its canonical rewriting in
  // source variables when its exponent lies in the image semigroup, else to
  // zero. Fullness of the semigroup inside its lattice is checked up to
  // fullness_bound (<=0 uses the configured default).
  static SplittingSpec make_semigroup_projection(const RingMap& map, int fullness_bound = 0);

  // Projection onto torus-weight-zero terms followed by rewriting in the
  // given invariant generators. Builds and retracts the presented inclusion
  // k[V1..Vk]/ker -> target.
  static SplittingSpec make_weight_projection(const QuotientRing& target,
                                              const MultiGrading& action,
                                              const std::vector<Polynomial>& invariant_generators);

  // Normalized trace of multiplication on a coset monomial basis; requires an
  // injective module-finite monomial inclusion with finite lattice index.
  static SplittingSpec make_trace_split(const RingMap& map, int fullness_bound = 0);

  static SplittingSpec compose_splittings(const SplittingSpec& inner,
                                          const SplittingSpec& outer);

  // Retraction induced on source/I -> target/I*target; verifies the
  // expand-contract hypothesis and re-checks well-definedness of sigma on
  // ideal multiples up to check_bound.
  static SplittingSpec descend_splitting(const SplittingSpec& spec, const Ideal& ideal,
                                         int check_bound = 4);

  // Trace certificate: sigma_0(1) equals the lattice index.
  const Integer& trace_rank() const;
  const std::vector<Monomial>& trace_basis() const;

 private:
  SplittingSpec() = default;

  struct MonoidData {
    std::vector<ZVec> image_exponents;
    ZMat lattice_hnf;
    GroebnerBasisPtr rewriting_gb;  // kernel of the map, for canonical rewrites
    Integer rank = 0;               // trace split only
    std::vector<Monomial> basis;    // trace split only
  };
  struct WeightData {
    MultiGrading action;
    PolyRing combined;                        // [target vars | V vars]
    std::vector<std::size_t> target_position;
    std::vector<std::size_t> source_position;
    GroebnerBasisPtr rewrite_gb;  // target ideal + (g_i - V_i), eliminating target vars
  };
  struct ComposeData {
    std::shared_ptr<const SplittingSpec> inner;
    std::shared_ptr<const SplittingSpec> outer;
  };
  struct DescentData {
    std::shared_ptr<const SplittingSpec> parent;
    Ideal ideal;
  };

  Polynomial evaluate_monoid(const Polynomial& p) const;
  Polynomial evaluate_weight(const Polynomial& p) const;

  SplittingKind kind_ = SplittingKind::SemigroupProjection;
  RingMap map_;
  std::shared_ptr<const MonoidData> monoid_;
  std::shared_ptr<const WeightData> weight_;
  std::shared_ptr<const ComposeData> compose_;
  std::shared_ptr<const DescentData> descent_;
};

struct SplittingViolation {
  std::string source_variable;
  Monomial monomial;  // target monomial m in the check sigma(phi(r) m) = r sigma(m)
  Polynomial lhs;
  Polynomial rhs;
};

struct SplittingReport {
  enum class Verdict { VerifiedToBound, Refuted };
  Polynomial sigma_of_one;
  bool sigma_fixes_one = false;
  std::vector<SplittingViolation> violations;
  int degree_bound = 0;
  Verdict verdict = Verdict::Refuted;

  void finalize() {
    verdict = (sigma_fixes_one && violations.empty()) ? Verdict::VerifiedToBound
                                                      : Verdict::Refuted;
  }
};

// Exact check of sigma(1) = 1 and source-linearity sigma(phi(r) m) = r sigma(m)
// over every source variable r and target monomial m of degree <= bound
// (bound <= 0 uses SUMMANDLAB_DEGREE_BOUND, default 8).
SplittingReport verify_splitting(const RingMap& map, const SplittingSpec& spec,
                                 int degree_bound = 0);

int default_degree_bound();

}  // namespace summandlab
