#ifndef STARKWELL_ERRORS_HPP
#define STARKWELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace starkwell {

// Invalid model parameters or run options. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A computation could not meet its contract (overflow, non-convergence,
// quadrature failure, missed pole, ...). CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

class OverflowError : public NumericalError {
public:
    explicit OverflowError(const std::string& what) : NumericalError(what) {}
};

// File system trouble. CLI exit code 4.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace starkwell

#endif
