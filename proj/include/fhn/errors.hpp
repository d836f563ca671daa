#pragma once

#include <stdexcept>
#include <string>

namespace fhn {

// Error taxonomy shared by the solver and diagnostic modules. Each carries a
// human-readable diagnostic assembled at the throw site.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonConvergence : Error {
    using Error::Error;
};
struct SignViolation : Error {
    using Error::Error;
};
struct SpectrumViolation : Error {
    using Error::Error;
};
struct DegenerateParameter : Error {
    using Error::Error;
};
struct FoldDetected : Error {
    using Error::Error;
};
struct EigensolverFailure : Error {
    using Error::Error;
};
struct HypothesisViolated : Error {
    using Error::Error;
};
struct LabelAmbiguity : Error {
    using Error::Error;
};
struct IntegratorFailure : Error {
    using Error::Error;
};
struct CountAmbiguity : Error {
    using Error::Error;
};
struct Instability : Error {
    using Error::Error;
};
struct DomainExhausted : Error {
    using Error::Error;
};
struct NoWake : Error {
    using Error::Error;
};
struct GridMismatch : Error {
    using Error::Error;
};
struct PhaseUnwrapFailure : Error {
    using Error::Error;
};
struct InsufficientData : Error {
    using Error::Error;
};
struct QuadratureStall : Error {
    using Error::Error;
};
struct ContourLeavesBall : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace fhn
