#include "vcw/error.hpp"

namespace vcw {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
        case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
        case ErrorCode::InvalidProfileParameter: return "InvalidProfileParameter";
        case ErrorCode::InvalidGrid: return "InvalidGrid";
        case ErrorCode::MisalignedField: return "MisalignedField";
        case ErrorCode::InvalidExponent: return "InvalidExponent";
        case ErrorCode::PositivityLoss: return "PositivityLoss";
        case ErrorCode::StateMismatch: return "StateMismatch";
        case ErrorCode::NonPositiveTime: return "NonPositiveTime";
        case ErrorCode::InvalidQuadrature: return "InvalidQuadrature";
        case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
        case ErrorCode::InsufficientSamples: return "InsufficientSamples";
        case ErrorCode::NonPositiveValue: return "NonPositiveValue";
        case ErrorCode::InvalidPerturbation: return "InvalidPerturbation";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::InvalidValue: return "InvalidValue";
        case ErrorCode::LayerContainmentViolated: return "LayerContainmentViolated";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace vcw
