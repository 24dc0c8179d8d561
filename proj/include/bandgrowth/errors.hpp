#pragma once

#include <stdexcept>
#include <string>

namespace bandgrowth {

/// Arithmetic between scalars of different fields (or elements of
/// different base algebras).
struct FieldMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A basis index or matrix position that is not valid for the algebra
/// it was used with.
struct IndexError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Construction-time algebraic validation failure: non-prime modulus,
/// Jacobi identity violation, bad unit declaration.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its contract (non-unital base where a
/// unit is required, n_max < 1, table too short, brute-force cap).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Scenario config rejected; carries the offending line (0 = whole file).
struct ConfigError : std::runtime_error {
    int line;
    ConfigError(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

} // namespace bandgrowth
