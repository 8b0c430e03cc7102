#pragma once

#include <stdexcept>
#include <string>

namespace poslab {

enum class ErrorCode {
  // matroids
  EmptyBases,
  MixedCardinality,
  ExchangeFailure,
  BadRank,
  NoTransversal,
  OverlapError,
  DependentContraction,
  EmptyResult,
  UnknownName,
  SameElement,
  BadElement,
  // exact kernel
  RankDeficient,
  NotSymmetric,
  ZeroPolynomial,
  BadParams,
  // polynomials
  BadIndex,
  DimensionMismatch,
  EmptyJ,
  SameVariable,
  // property checks
  EmptyInput,
  EmptyDomain,
  DomainNotBinary,
  NegativeCoefficientInput,
  NonpositiveC,
  NotMultiaffine,
  NotHomogeneous,
  EOnVanishingLocus,
  // positroids
  InvalidNecklace,
  // tropical
  ZeroCoefficientStored,
  SupportMismatch,
  NotAPositroid,
  NotValuated,
  NotValuatedFlag,
  ChainTooShort,
  ConstituentNotValuated,
  InvalidChain,
  NonRationalEvaluation,
  // input handling
  Parse,
  Usage,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace poslab
