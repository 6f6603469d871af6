#include "sobwave/errors.hpp"

namespace sobwave {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::UnsupportedSpec: return "UnsupportedSpec";
        case ErrorCode::DimensionOverflow: return "DimensionOverflow";
        case ErrorCode::WeightOverflow: return "WeightOverflow";
        case ErrorCode::IndexInadmissible: return "IndexInadmissible";
        case ErrorCode::TransversalityViolated: return "TransversalityViolated";
        case ErrorCode::FattenOverflow: return "FattenOverflow";
        case ErrorCode::NoTransitionRoom: return "NoTransitionRoom";
        case ErrorCode::MaskOverlap: return "MaskOverlap";
        case ErrorCode::DegenerateFit: return "DegenerateFit";
        case ErrorCode::ConfigInvalid: return "ConfigInvalid";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace sobwave
