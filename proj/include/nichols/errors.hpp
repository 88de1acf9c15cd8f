#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero in Q(zeta_N)") {}
};

struct ConductorCeilingExceeded : Error {
    explicit ConductorCeilingExceeded(long n, long ceiling)
        : Error("conductor " + std::to_string(n) + " exceeds ceiling " + std::to_string(ceiling)) {}
};

struct BraidingMismatch : Error {
    BraidingMismatch() : Error("operands live over different braidings") {}
};

struct NotHomogeneous : Error {
    NotHomogeneous() : Error("element is not multidegree-homogeneous") {}
};

struct DegenerateDenominator : Error {
    explicit DegenerateDenominator(const std::string& what) : Error("degenerate denominator: " + what) {}
};

struct CutoffExceeded : Error {
    explicit CutoffExceeded(long asked, long cutoff)
        : Error("requested degree " + std::to_string(asked) + " exceeds cutoff " + std::to_string(cutoff)) {}
};

struct UnrecognizedFamily : Error {
    UnrecognizedFamily() : Error("braiding does not lie in a recognized descent family") {}
};

struct IndexError : Error {
    explicit IndexError(const std::string& what) : Error("index error: " + what) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error("parse error at position " + std::to_string(pos) + ": " + what), position(pos) {}
    std::size_t position;
};

struct NoTermination : Error {
    explicit NoTermination(const std::string& what) : Error("no termination: " + what) {}
};

struct Inapplicable : Error {
    explicit Inapplicable(const std::string& what) : Error("inapplicable: " + what) {}
};

} // namespace nichols
