#include "holo/error.hpp"

namespace holo {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::ZeroOnCurve: return "ZeroOnCurve";
    case ErrorKind::NonConvergent: return "NonConvergent";
    case ErrorKind::GeometryViolation: return "GeometryViolation";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::EmptyNormingSet: return "EmptyNormingSet";
    }
    return "Unknown";
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::NonConvergent: return 4;
    default: return 3;
    }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : Error(ErrorKind::Parse, message + " at position " + std::to_string(position)),
      position_(position)
{
}

}  // namespace holo
