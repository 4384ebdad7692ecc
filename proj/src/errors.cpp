#include "elnitsky/errors.hpp"

namespace elnitsky {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotABijection: return "NotABijection";
        case ErrorCode::BadPositions: return "BadPositions";
        case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::MixedPermutations: return "MixedPermutations";
        case ErrorCode::NotFullySupported: return "NotFullySupported";
        case ErrorCode::ClassPermutationMismatch: return "ClassPermutationMismatch";
        case ErrorCode::DomainViolation: return "DomainViolation";
        case ErrorCode::UnknownTheorem: return "UnknownTheorem";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace elnitsky
