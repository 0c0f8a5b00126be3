#pragma once

#include <stdexcept>
#include <string>

namespace relopt {

/// Invalid parameter or model/contract pairing (maps to CLI exit code 2).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed or inconsistent input data (maps to CLI exit code 3).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Estimation failed on data that parses fine (maps to CLI exit code 3).
class CalibrationError : public std::runtime_error {
public:
    explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical routine could not reach its tolerance (maps to CLI exit code 4).
/// Carries the best estimate available when the budget ran out.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double best_estimate)
        : std::runtime_error(what), best_estimate_(best_estimate) {}

    double best_estimate() const { return best_estimate_; }

private:
    double best_estimate_;
};

} // namespace relopt
