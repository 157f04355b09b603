#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bezsub {

/// Machine-readable failure categories. The CLI maps these to the
/// `error.code` field of its structured output.
enum class ErrorCode {
    parse,     ///< malformed rational / document / basis spec
    basis,     ///< basis validation or basis mismatch between operands
    degree,    ///< degree precondition violated (e.g. deg F > deg G required)
    range,     ///< index or size out of range
    shape,     ///< matrix shape mismatch
    division,  ///< division by zero (scalar or polynomial)
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace bezsub
