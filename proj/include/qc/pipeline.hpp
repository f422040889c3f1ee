#pragma once

#include "qc/mapping.hpp"

namespace qc {

struct SolveOptions {
    double tol = 1e-10;
    int maxIter = 10000;
};

// Full pipeline: mesh construction, nu averages, assembly, least squares,
// exponentiation.
SolutionMesh solve_disk(const BeltramiSpec& spec, MeshOrder order, SolveOptions opts = {});

}  // namespace qc
