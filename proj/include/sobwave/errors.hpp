#pragma once

#include <stdexcept>
#include <string>

namespace sobwave {

// Machine-readable failure codes. Gate rejections (index arithmetic,
// transversality) use the same mechanism as hard usage errors so the CLI can
// record them as structured FAIL entries instead of crashing.
enum class ErrorCode {
    GridMismatch,
    DimMismatch,
    UnsupportedSpec,
    DimensionOverflow,
    WeightOverflow,
    IndexInadmissible,
    TransversalityViolated,
    FattenOverflow,
    NoTransitionRoom,
    MaskOverlap,
    DegenerateFit,
    ConfigInvalid,
    IoError,
};

const char* error_code_name(ErrorCode code);

class SobwaveError : public std::runtime_error {
public:
    SobwaveError(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Gate failures additionally carry the violated inequality in a normalized
// spelling, e.g. "r <= m/2" or "r' + r'' < 0".
class GateError : public SobwaveError {
public:
    GateError(ErrorCode code, std::string violated, const std::string& message)
        : SobwaveError(code, message), violated_(std::move(violated)) {}

    const std::string& violated() const noexcept { return violated_; }

private:
    std::string violated_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& message) {
    throw SobwaveError(code, message);
}

}  // namespace sobwave
