#pragma once

#include <stdexcept>
#include <string>

namespace infolab {

enum class ErrorCode {
    negative_weight,
    not_normalized,
    zero_total,
    unknown_label,
    empty_sample,
    zero_conditioning_event,
    alphabet_mismatch,
    boundary_point,
    enumeration_too_large,
    out_of_box,
    no_finite_objective,
    alphabet_too_large,
    not_deterministic,
    not_endomorphism,
    duplicate_label,
    bad_shape,
    bad_input,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace infolab
