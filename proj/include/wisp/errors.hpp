#pragma once

#include <stdexcept>
#include <string>

namespace wisp {

/// Invalid user input: bad grid parameters, unknown function names,
/// malformed configuration files, mismatched grids.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical failure: non-finite data, a diverging iteration.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the reconstruction loop when an iterate stops being finite.
class DivergenceError : public NumericalError {
public:
    DivergenceError(int iteration, const std::string& what)
        : NumericalError("iteration " + std::to_string(iteration) + ": " + what)
        , iteration_(iteration)
    {
    }

    int iteration() const noexcept { return iteration_; }

private:
    int iteration_;
};

} // namespace wisp
