#pragma once

#include <stdexcept>
#include <string>

namespace qc {

// Error taxonomy shared by the library.  The CLI maps these onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user-supplied parameter (mesh order out of bounds, bad spec string).
struct ParameterError : Error {
    using Error::Error;
};

// Evaluation outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Coincident points, collinear triples and similar degenerate geometry.
struct DegenerateInputError : Error {
    using Error::Error;
};

// A Beltrami field with |mu| >= 1 somewhere on the mesh.
struct InadmissibleFieldError : Error {
    using Error::Error;
};

// Least-squares solve failed to certify optimality.
struct SolverError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace qc
