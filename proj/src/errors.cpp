#include "summandlab/errors.hpp"

namespace summandlab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "syntax-error";
    case Errc::UnknownVariable: return "unknown-variable";
    case Errc::RingMismatch: return "ring-mismatch";
    case Errc::ArityMismatch: return "arity-mismatch";
    case Errc::NegativeExponent: return "negative-exponent";
    case Errc::BudgetExceeded: return "budget-exceeded";
    case Errc::NotZeroDimensional: return "not-zero-dimensional";
    case Errc::InhomogeneousIdeal: return "inhomogeneous-ideal";
    case Errc::NotMonomialMap: return "not-monomial-map";
    case Errc::FullnessFailure: return "fullness-failure";
    case Errc::GeneratorNotInvariant: return "generator-not-invariant";
    case Errc::RewritingFailure: return "rewriting-failure";
    case Errc::InfiniteBasis: return "infinite-basis";
    case Errc::RankZero: return "rank-zero";
    case Errc::CompositionMismatch: return "composition-mismatch";
    case Errc::ContractionHypothesisFails: return "contraction-hypothesis-fails";
    case Errc::NotPositivelyGraded: return "not-positively-graded";
    case Errc::NotWellDefined: return "not-well-defined";
    case Errc::NonIsolated: return "non-isolated";
    case Errc::NonRationalPoints: return "non-rational-points";
    case Errc::JacobianNotZeroDimensional: return "jacobian-not-zero-dimensional";
    case Errc::PointNotSingular: return "point-not-singular";
    case Errc::PointNotOnChart: return "point-not-on-chart";
    case Errc::NotHomogeneous: return "not-homogeneous";
    case Errc::NotACubic: return "not-a-cubic";
    case Errc::NotQuadratic: return "not-quadratic";
    case Errc::Reducible: return "reducible";
    case Errc::UnexpectedConfiguration: return "unexpected-configuration";
    case Errc::BadIndex: return "bad-index";
    case Errc::UnknownExample: return "unknown-example";
    case Errc::BadParams: return "bad-params";
  }
  return "unknown";
}

}  // namespace summandlab
