#pragma once

#include <stdexcept>
#include <string>

namespace likepow {

enum class ErrorCode {
    invalid_argument,
    out_of_range,
    parse_error,
    malformed_sequence,
    cap_exceeded,
    budget_exceeded,
    overflow,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace likepow
