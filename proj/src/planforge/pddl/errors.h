#pragma once

#include <stdexcept>
#include <string>

namespace planforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace pddl {

struct SourcePos {
    int line = 0;
    int column = 0;
};

// All frontend errors carry a position so the driver can print
// "file:line:column: message" diagnostics.
struct FrontendError : Error {
    FrontendError(SourcePos p, const std::string& message) : Error(message), pos(p) {}
    SourcePos pos;
};

struct LexError : FrontendError {
    using FrontendError::FrontendError;
};

struct ParseError : FrontendError {
    using FrontendError::FrontendError;
};

// The input is well-formed PDDL but outside the supported fragment.
struct UnsupportedRequirement : FrontendError {
    UnsupportedRequirement(SourcePos p, const std::string& requirement)
        : FrontendError(p, "unsupported requirement " + requirement), name(requirement) {}
    std::string name;
};

struct DomainMismatch : FrontendError {
    using FrontendError::FrontendError;
};

struct TypeError : FrontendError {
    using FrontendError::FrontendError;
};

}  // namespace pddl
}  // namespace planforge
