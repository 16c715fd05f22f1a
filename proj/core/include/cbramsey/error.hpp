#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cbramsey {

enum class ErrorKind {
    InvalidVertex,
    SelfLoopCreated,
    OutOfRange,
    OddCycleLength,
    EllOutOfRange,
    Unsupported,
    AttachOverflow,
    InfeasibleAssembly,
    NotBlockClique,
    NoIndependentSet,
    ResourceLimit,
    EmptyFamily,
    ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace cbramsey
