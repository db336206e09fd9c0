#ifndef GARDNER_ERRORS_HPP
#define GARDNER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gardner {

/// Bad parameters or malformed input; maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

enum class FailureKind {
    NonFinite,              // NaN/Inf produced during time stepping (blow-up or CFL violation)
    RootLost,               // phase tracker found no sign change in its search window
    DegenerateDenominator,  // phase ODE denominator too close to zero
};

/// Runtime failure of an experiment; maps to CLI exit code 3.
class RuntimeFailure : public std::runtime_error {
public:
    RuntimeFailure(FailureKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    FailureKind kind() const { return kind_; }

private:
    FailureKind kind_;
};

inline const char* failure_kind_name(FailureKind k) {
    switch (k) {
        case FailureKind::NonFinite: return "NonFinite";
        case FailureKind::RootLost: return "RootLost";
        case FailureKind::DegenerateDenominator: return "DegenerateDenominator";
    }
    return "Unknown";
}

}  // namespace gardner

#endif
