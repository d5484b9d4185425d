#pragma once

#include <stdexcept>
#include <string>

namespace tap {

// Exit codes used by the CLI: 0 ok, 2 validation, 3 infeasible,
// 4 instance too large, 5 certificate/consistency check failed.

/// Bad instance data or malformed input file.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input JSON does not match the expected schema.
struct SchemaError : ValidationError {
    using ValidationError::ValidationError;
};

/// The instance admits no feasible augmentation / the LP is infeasible.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An enumeration cap would be exceeded; caller must raise the cap explicitly.
struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A verification check failed; `check` names the failed check.
struct CheckFailedError : std::runtime_error {
    std::string check;
    CheckFailedError(std::string check_name, const std::string& msg)
        : std::runtime_error("CheckFailed(" + check_name + "): " + msg),
          check(std::move(check_name)) {}
};

}  // namespace tap
