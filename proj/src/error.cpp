#include "hyperratio/error.hpp"

namespace hyperratio {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::DivisionContainsZero: return "DIVISION_CONTAINS_ZERO";
    case ErrorCode::NegativeSqrt: return "NEGATIVE_SQRT";
    case ErrorCode::NotConverged: return "NOT_CONVERGED";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::TailSeedInvalid: return "TAIL_SEED_INVALID";
    case ErrorCode::SignViolation: return "SIGN_VIOLATION";
    case ErrorCode::ArccosRange: return "ARCCOS_RANGE";
    case ErrorCode::DenominatorNonpositive: return "DENOMINATOR_NONPOSITIVE";
    case ErrorCode::NonpositiveC: return "NONPOSITIVE_C";
    case ErrorCode::RadicandNegative: return "RADICAND_NEGATIVE";
    case ErrorCode::SignConditionFailed: return "SIGN_CONDITION_FAILED";
    case ErrorCode::Inconclusive: return "INCONCLUSIVE";
    case ErrorCode::Discriminant: return "DISCRIMINANT";
    case ErrorCode::ShrinkWindow: return "SHRINK_WINDOW";
    case ErrorCode::Overprecision: return "OVERPRECISION";
    case ErrorCode::UnknownId: return "UNKNOWN_ID";
    case ErrorCode::Config: return "CONFIG";
  }
  return "UNKNOWN";
}

}  // namespace hyperratio
