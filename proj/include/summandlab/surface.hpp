#pragma once

#include <string>
#include <vector>

#include "summandlab/calculus.hpp"
#include "summandlab/polynomial.hpp"

namespace summandlab {

// Rational double point type (or the failure marker).
struct AdeClass {
  enum class Family { A, D, E, NotDuVal };
  Family family = Family::NotDuVal;
  int index = 0;  // A_k, D_k, E_k

  bool is_du_val() const { return family != Family::NotDuVal; }
  std::string name() const;

  bool operator==(const AdeClass& other) const {
    return family == other.family && index == other.index;
  }
  bool operator<(const AdeClass& other) const {
    if (family != other.family) return family < other.family;
    return index < other.index;
  }
};

struct SingularPointReport {
  std::vector<Scalar> point;  // projective coordinates, first nonzero entry scaled to 1
  std::string chart;          // chart variable used for the local analysis
  std::size_t milnor = 0;
  std::size_t hessian_corank = 0;
  AdeClass type;
};

struct ProjectivePoints {
  std::vector<std::vector<Scalar>> points;
  bool complete = true;  // false when non-rational singular points remain
};

// Singular points of the projective hypersurface V(form), gathered chart by
// chart and deduplicated; throws NonIsolated when a chart's singular scheme
// is positive-dimensional.
ProjectivePoints projective_singular_points(const Polynomial& form);

// Local Milnor number at an isolated singular rational point, via the
// saturation difference dim(A/J) - dim(A/(J : m^infty)).
std::size_t local_milnor(const Polynomial& form, const std::vector<Scalar>& point,
                         const std::string& chart);

AdeClass ade_classify(const Polynomial& form, const std::vector<Scalar>& point,
                      const std::string& chart);

SingularPointReport classify_point(const Polynomial& form, const std::vector<Scalar>& point,
                                   const std::string& chart);

struct SurfaceConfiguration {
  std::vector<AdeClass> types;  // sorted multiset
  std::size_t mu_sum = 0;
  std::vector<SingularPointReport> reports;
};

// Configuration over all singular points; for cubics the result is checked
// against the table of admissible configurations.
SurfaceConfiguration singularity_configuration(const Polynomial& form);

enum class SurfaceVerdictKind {
  SummandToric3A2,
  RuledOutGurjar,
  RuledOutCohomology,
  RuledOutSmooth,
  NotQuotientSingularities,
  Inconclusive,
};

const char* to_string(SurfaceVerdictKind kind);

struct SurfaceVerdict {
  std::vector<AdeClass> configuration;
  std::size_t mu_sum = 0;
  SurfaceVerdictKind verdict = SurfaceVerdictKind::Inconclusive;
  std::string justification;
  std::vector<SingularPointReport> reports;
};

// Full classification pipeline for an irreducible homogeneous cubic in four
// variables.
SurfaceVerdict cubic_verdict(const Polynomial& form);

// The admissible singularity configurations of normal cubic surfaces, as
// multisets (the two D4 deformation classes collapse to one entry).
const std::vector<std::vector<AdeClass>>& admissible_cubic_configurations();

// True when the cubic form has a rational linear factor.
bool has_rational_linear_factor(const Polynomial& form);

}  // namespace summandlab
