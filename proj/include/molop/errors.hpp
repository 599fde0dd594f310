#pragma once

#include <stdexcept>
#include <string>

namespace molop {

/// Failure classes used across the library. Input-side problems (Io, Schema,
/// Binding, InvalidArgument) and computation-side problems (Degenerate,
/// NoFiredRule) map to different process exit codes in the CLI.
enum class ErrorKind {
    InvalidArgument,
    Schema,
    Binding,
    Degenerate,
    NoFiredRule,
    Io,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    bool is_input_error() const {
        return kind_ == ErrorKind::InvalidArgument || kind_ == ErrorKind::Schema ||
               kind_ == ErrorKind::Binding || kind_ == ErrorKind::Io;
    }

private:
    ErrorKind kind_;
};

inline Error invalid_argument(const std::string& msg) { return Error(ErrorKind::InvalidArgument, msg); }
inline Error schema_error(const std::string& msg) { return Error(ErrorKind::Schema, msg); }
inline Error binding_error(const std::string& msg) { return Error(ErrorKind::Binding, msg); }
inline Error degenerate_error(const std::string& msg) { return Error(ErrorKind::Degenerate, msg); }
inline Error no_fired_rule(const std::string& msg) { return Error(ErrorKind::NoFiredRule, msg); }
inline Error io_error(const std::string& msg) { return Error(ErrorKind::Io, msg); }

} // namespace molop
