#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace holo {

enum class ErrorKind {
    Parse,
    PoleProximity,
    ZeroFunction,
    ZeroPolynomial,
    ZeroOnCurve,
    NonConvergent,
    GeometryViolation,
    Precondition,
    EmptyNormingSet,
};

std::string_view to_string(ErrorKind kind);

// Process exit code for each error family: 2 parse, 3 geometry/precondition,
// 4 numeric non-convergence.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace holo
