#pragma once

#include <stdexcept>
#include <string>

namespace rankone {

/// Failure categories. The CLI maps each one onto a distinct exit code.
enum class ErrorKind {
    invalid_input,   // malformed spec, bad arguments
    domain,          // mathematically undefined request (n = 0, non-mixing)
    resource,        // budget or size cap exceeded
    consistency,     // two computation routes disagree
    unsupported,     // configuration outside the implemented cases
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) fail(kind, what);
}

} // namespace rankone
