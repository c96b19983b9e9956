#pragma once

#include <stdexcept>
#include <string>

namespace trineq {

// Base for every library failure. The name of the concrete error type is
// prefixed to the message so diagnostics printed by the CLI identify the
// failure class without RTTI.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define TRINEQ_ERROR_TYPE(NAME)                                              \
    struct NAME : Error {                                                    \
        explicit NAME(const std::string& what) : Error(#NAME ": " + what) {} \
    }

TRINEQ_ERROR_TYPE(NotHermitian);
TRINEQ_ERROR_TYPE(ConvergenceFailure);
TRINEQ_ERROR_TYPE(NegativeEigenvalue);
TRINEQ_ERROR_TYPE(BadExponent);
TRINEQ_ERROR_TYPE(LengthMismatch);
TRINEQ_ERROR_TYPE(DimMismatch);
TRINEQ_ERROR_TYPE(PreconditionViolated);
TRINEQ_ERROR_TYPE(SingularShift);
TRINEQ_ERROR_TYPE(SingularMatrix);
TRINEQ_ERROR_TYPE(TruncationError);
TRINEQ_ERROR_TYPE(NonIntegerS);
TRINEQ_ERROR_TYPE(DomainError);
TRINEQ_ERROR_TYPE(BadSpec);
TRINEQ_ERROR_TYPE(IncompatibleEnsemble);
TRINEQ_ERROR_TYPE(UnknownInequality);
TRINEQ_ERROR_TYPE(CorruptWitness);
TRINEQ_ERROR_TYPE(ParseError);
TRINEQ_ERROR_TYPE(ConfigError);

#undef TRINEQ_ERROR_TYPE

} // namespace trineq
