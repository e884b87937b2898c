#include "lawson/error.hpp"

namespace lawson {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Validation: return "Validation";
    case ErrorCode::ExcludedCase: return "ExcludedCase";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DegenerateCircle: return "DegenerateCircle";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NonInvolutiveGenerator: return "NonInvolutiveGenerator";
    case ErrorCode::ParityUndefined: return "ParityUndefined";
    case ErrorCode::NonManifoldGluing: return "NonManifoldGluing";
    case ErrorCode::NonIntegerChi: return "NonIntegerChi";
    case ErrorCode::AlreadyOrientable: return "AlreadyOrientable";
    case ErrorCode::ActionNotFree: return "ActionNotFree";
    case ErrorCode::MissingParity: return "MissingParity";
    case ErrorCode::BranchRuleInapplicable: return "BranchRuleInapplicable";
    case ErrorCode::InconsistentEvidence: return "InconsistentEvidence";
    case ErrorCode::DomainUndetermined: return "DomainUndetermined";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
  }
  return "Unknown";
}

}  // namespace lawson
