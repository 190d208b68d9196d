#pragma once

#include <stdexcept>
#include <string>

namespace superosc {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad problem data: coincident nodes, empty amplitudes, degenerate windows.
struct DomainError : Error {
    using Error::Error;
};

// Working precision too low for the requested computation.
struct PrecisionError : Error {
    using Error::Error;
};

// Iterative kernel failed to converge within its cap.
struct ConvergenceError : Error {
    using Error::Error;
};

// Quadrature budget too small; carries a usable hint.
struct QuadratureError : Error {
    QuadratureError(const std::string& what, long required)
        : Error(what), required_n_quad(required) {}
    long required_n_quad;
};

}  // namespace superosc
