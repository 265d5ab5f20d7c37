#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gsfid {

/// Invalid or inconsistent input parameters.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A quasiparticle energy vanished exactly, so an angle derivative is undefined.
class SingularityError : public std::domain_error {
public:
    SingularityError(const std::string& what, std::int64_t mode)
        : std::domain_error(what), mode_(mode) {}
    std::int64_t mode() const noexcept { return mode_; }

private:
    std::int64_t mode_;
};

/// Dicke coupling outside the normal phase.
struct PhaseError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Matrix argument is not symmetric positive-definite.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Requested enumeration exceeds the supported size.
struct ResourceError : std::length_error {
    using std::length_error::length_error;
};

/// Numerical procedure failed to reach its tolerance.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Power-law regression could not be performed on the given data.
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace gsfid
