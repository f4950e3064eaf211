#include "infolab/errors.hpp"

namespace infolab {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::negative_weight: return "NegativeWeight";
        case ErrorCode::not_normalized: return "NotNormalized";
        case ErrorCode::zero_total: return "ZeroTotal";
        case ErrorCode::unknown_label: return "UnknownLabel";
        case ErrorCode::empty_sample: return "EmptySample";
        case ErrorCode::zero_conditioning_event: return "ZeroConditioningEvent";
        case ErrorCode::alphabet_mismatch: return "AlphabetMismatch";
        case ErrorCode::boundary_point: return "BoundaryPoint";
        case ErrorCode::enumeration_too_large: return "EnumerationTooLarge";
        case ErrorCode::out_of_box: return "OutOfBox";
        case ErrorCode::no_finite_objective: return "NoFiniteObjective";
        case ErrorCode::alphabet_too_large: return "AlphabetTooLarge";
        case ErrorCode::not_deterministic: return "NotDeterministic";
        case ErrorCode::not_endomorphism: return "NotEndomorphism";
        case ErrorCode::duplicate_label: return "DuplicateLabel";
        case ErrorCode::bad_shape: return "BadShape";
        case ErrorCode::bad_input: return "BadInput";
    }
    return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

} // namespace infolab
