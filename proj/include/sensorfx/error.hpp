#pragma once

#include <stdexcept>
#include <string>

namespace sensorfx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameter or image that violates an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

enum class IoErrorKind {
    NotFound,
    UnsupportedFormat,
    DecodeFailure,
    WriteFailure,
};

class IoError : public Error {
public:
    IoError(IoErrorKind kind, const std::string& message)
        : Error(message), kind_(kind) {}

    IoErrorKind kind() const noexcept { return kind_; }

private:
    IoErrorKind kind_;
};

} // namespace sensorfx
