#ifndef ELNITSKY_ERRORS_HPP
#define ELNITSKY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace elnitsky {

// Stable error codes; the CLI maps each to a machine-readable object on
// stderr and exit code 1.
enum class ErrorCode {
    NotABijection,
    BadPositions,
    LetterOutOfRange,
    SizeLimitExceeded,
    MixedPermutations,
    NotFullySupported,
    ClassPermutationMismatch,
    DomainViolation,
    UnknownTheorem,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace elnitsky

#endif
