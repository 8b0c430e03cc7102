#include "poslab/error.hpp"

namespace poslab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyBases: return "EmptyBases";
    case ErrorCode::MixedCardinality: return "MixedCardinality";
    case ErrorCode::ExchangeFailure: return "ExchangeFailure";
    case ErrorCode::BadRank: return "BadRank";
    case ErrorCode::NoTransversal: return "NoTransversal";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::DependentContraction: return "DependentContraction";
    case ErrorCode::EmptyResult: return "EmptyResult";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::SameElement: return "SameElement";
    case ErrorCode::BadElement: return "BadElement";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyJ: return "EmptyJ";
    case ErrorCode::SameVariable: return "SameVariable";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::DomainNotBinary: return "DomainNotBinary";
    case ErrorCode::NegativeCoefficientInput: return "NegativeCoefficientInput";
    case ErrorCode::NonpositiveC: return "NonpositiveC";
    case ErrorCode::NotMultiaffine: return "NotMultiaffine";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::EOnVanishingLocus: return "EOnVanishingLocus";
    case ErrorCode::InvalidNecklace: return "InvalidNecklace";
    case ErrorCode::ZeroCoefficientStored: return "ZeroCoefficientStored";
    case ErrorCode::SupportMismatch: return "SupportMismatch";
    case ErrorCode::NotAPositroid: return "NotAPositroid";
    case ErrorCode::NotValuated: return "NotValuated";
    case ErrorCode::NotValuatedFlag: return "NotValuatedFlag";
    case ErrorCode::ChainTooShort: return "ChainTooShort";
    case ErrorCode::ConstituentNotValuated: return "ConstituentNotValuated";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::NonRationalEvaluation: return "NonRationalEvaluation";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace poslab
