#pragma once

#include <stdexcept>
#include <string>

namespace igp {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    Infeasible,
    Bound,
    Io,
    Validation,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace igp
