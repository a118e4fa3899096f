#include "lefkit/error.hpp"

namespace lefkit {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::VarMismatch: return "VarMismatch";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::BadBasis: return "BadBasis";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvalidInput: return "InvalidInput";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

} // namespace lefkit
