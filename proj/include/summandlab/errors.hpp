#pragma once

#include <stdexcept>
#include <string>

namespace summandlab {

// Machine-readable failure codes surfaced through the CLI and tests.
enum class Errc {
  SyntaxError,
  UnknownVariable,
  RingMismatch,
  ArityMismatch,
  NegativeExponent,
  BudgetExceeded,
  NotZeroDimensional,
  InhomogeneousIdeal,
  NotMonomialMap,
  FullnessFailure,
  GeneratorNotInvariant,
  RewritingFailure,
  InfiniteBasis,
  RankZero,
  CompositionMismatch,
  ContractionHypothesisFails,
  NotPositivelyGraded,
  NotWellDefined,
  NonIsolated,
  NonRationalPoints,
  JacobianNotZeroDimensional,
  PointNotSingular,
  PointNotOnChart,
  NotHomogeneous,
  NotACubic,
  NotQuadratic,
  Reducible,
  UnexpectedConfiguration,
  BadIndex,
  UnknownExample,
  BadParams,
};

const char* errc_name(Errc code);

class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(Errc code, const std::string& message, std::string witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  Errc code() const { return code_; }
  const std::string& witness() const { return witness_; }

 private:
  Errc code_;
  std::string witness_;
};

// Parse failures carry the offset into the input text.
class ParseError : public AlgebraError {
 public:
  ParseError(Errc code, const std::string& message, std::size_t position)
      : AlgebraError(code, message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace summandlab
