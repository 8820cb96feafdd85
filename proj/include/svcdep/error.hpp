#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace svcdep {

enum class ErrorKind {
    InvalidPair,
    NoDependency,
    Ingest,
    Revision,
    EmptySystem,
    Load,
    Validation,
    InvalidPath,
    InvalidName,
    InvalidMerge,
    InvalidDiff,
    Config,
    Io,
    Generator,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the CLI can map it to
// an exit code without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace svcdep
