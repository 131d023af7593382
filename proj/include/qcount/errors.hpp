#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qcount {

// Base of all library errors. Domain errors are bad inputs (CLI exit 2),
// resource errors are exhausted budgets or width guards (CLI exit 3).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ResourceError : Error {
    using Error::Error;
};

struct DegenerateFormError : DomainError {
    DegenerateFormError() : DomainError("degenerate form: det(f) = 0") {}
};

struct DefiniteFormError : DomainError {
    DefiniteFormError() : DomainError("definite form: asymptotics require an indefinite form") {}
};

struct NotApplicableError : DomainError {
    using DomainError::DomainError;
};

struct CapExceededError : ResourceError {
    using ResourceError::ResourceError;
};

struct NotStabilizedError : ResourceError {
    NotStabilizedError(int64_t p, int k_cap)
        : ResourceError("local density at p=" + std::to_string(p) +
                        " not stabilized up to k=" + std::to_string(k_cap)),
          k_cap(k_cap) {}
    int k_cap;
};

struct QuadratureFailureError : ResourceError {
    using ResourceError::ResourceError;
};

// Integer result exceeded the carried width (or a size guard).
struct WidthOverflowError : ResourceError {
    using ResourceError::ResourceError;
};

struct FactorizationTimeoutError : ResourceError {
    using ResourceError::ResourceError;
};

// Two supposedly equal routes disagreed beyond tolerance.
struct DisagreementError : ResourceError {
    using ResourceError::ResourceError;
};

struct MismatchError : ResourceError {
    MismatchError(int64_t T, int64_t generic, int64_t fast)
        : ResourceError("enumerator mismatch at T=" + std::to_string(T) +
                        ": generic=" + std::to_string(generic) +
                        " fast=" + std::to_string(fast)),
          T(T) {}
    int64_t T;
};

}  // namespace qcount
