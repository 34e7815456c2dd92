#pragma once

#include <stdexcept>
#include <string>

namespace cfdyn {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Moebius denominator cz + d vanished; for rational inputs this signals
// the end of a finite orbit rather than a bug.
struct PoleError : Error {
    explicit PoleError(const std::string& msg = "pole: cz + d = 0") : Error(msg) {}
};

struct OriginError : Error {
    explicit OriginError(const std::string& msg = "operation undefined at z = 0") : Error(msg) {}
};

struct DiagonalError : Error {
    explicit DiagonalError(const std::string& msg = "z = w lies on the excluded diagonal") : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    int depth;
    explicit DivisionByZero(int at_depth)
        : Error("division by zero at depth " + std::to_string(at_depth)), depth(at_depth) {}
};

// Iteration exceeded its proven budget; indicates an implementation bug,
// not a bad input.
struct NonTermination : Error {
    explicit NonTermination(const std::string& msg) : Error(msg) {}
};

struct BudgetExhausted : Error {
    explicit BudgetExhausted(const std::string& msg) : Error(msg) {}
};

struct EmptyRegionInBox : Error {
    explicit EmptyRegionInBox(const std::string& msg = "no interior point found in box") : Error(msg) {}
};

struct WitnessOnBoundary : Error {
    explicit WitnessOnBoundary(const std::string& msg = "witness point fell on a boundary") : Error(msg) {}
};

struct NoStabilization : Error {
    explicit NoStabilization(const std::string& msg) : Error(msg) {}
};

struct BoundaryAmbiguous : Error {
    explicit BoundaryAmbiguous(const std::string& msg = "point within epsilon of boundary") : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace cfdyn
