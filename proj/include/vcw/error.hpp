#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vcw {

/// Failure categories raised by the library. Each maps onto one contract
/// violation; the CLI turns them into exit codes.
enum class ErrorCode {
    NonPositiveParameter,
    GammaOutOfRange,
    InvalidProfileParameter,
    InvalidGrid,
    MisalignedField,
    InvalidExponent,
    PositivityLoss,
    StateMismatch,
    NonPositiveTime,
    InvalidQuadrature,
    NonPositiveArgument,
    InsufficientSamples,
    NonPositiveValue,
    InvalidPerturbation,
    ParseError,
    UnknownKey,
    InvalidValue,
    LayerContainmentViolated,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

    /// Configuration problems (as opposed to numerical failures during a run).
    bool is_config_error() const noexcept {
        switch (code_) {
            case ErrorCode::ParseError:
            case ErrorCode::UnknownKey:
            case ErrorCode::InvalidValue:
            case ErrorCode::LayerContainmentViolated:
            case ErrorCode::NonPositiveParameter:
            case ErrorCode::GammaOutOfRange:
            case ErrorCode::InvalidProfileParameter:
            case ErrorCode::InvalidGrid:
            case ErrorCode::InvalidPerturbation:
            case ErrorCode::InvalidQuadrature:
                return true;
            default:
                return false;
        }
    }

private:
    ErrorCode code_;
};

}  // namespace vcw
