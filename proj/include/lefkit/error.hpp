#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lefkit {

enum class ErrorKind {
    VarMismatch,
    BadPrime,
    InvalidSpec,
    Unsupported,
    NotLinear,
    OutOfRange,
    ZeroPolynomial,
    BadBasis,
    TooLarge,
    NotDominant,
    Parse,
    InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every lefkit operation; `kind()` carries the failure class
/// so front ends can map it to exit codes without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace lefkit
