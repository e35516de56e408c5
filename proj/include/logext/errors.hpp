#ifndef LOGEXT_ERRORS_HPP
#define LOGEXT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logext {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix shape mismatch (non-square where square is required, etc.)
struct DimensionError : Error {
    using Error::Error;
};

// Non-symmetric input to an operation that requires symmetry.
struct SymmetryError : Error {
    using Error::Error;
};

// Singular matrix in solve(); carries the rank found during elimination.
struct SingularMatrixError : Error {
    int rank;
    SingularMatrixError(const std::string& msg, int rank_)
        : Error(msg), rank(rank_) {}
};

// Malformed graph data or schema violation.
struct GraphError : Error {
    using Error::Error;
};

// Exceptional lattice is not negative definite: the contraction does not exist.
struct LatticeError : Error {
    using Error::Error;
};

// Input pair is not (numerically) log canonical.
struct NotLcError : Error {
    using Error::Error;
};

// Exhaustive search size cap exceeded.
struct SearchCapError : Error {
    using Error::Error;
};

// Bad CLI / verifier arguments.
struct UsageError : Error {
    using Error::Error;
};

}  // namespace logext

#endif
