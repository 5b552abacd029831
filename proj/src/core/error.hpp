#pragma once

#include <stdexcept>
#include <string>

namespace frc {

enum class ErrorCode {
    invalid_argument,
    context_mismatch,
    cap_exceeded,
    precondition,
    inconsistent,
    budget_exhausted,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace frc
